#include "gcset/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcset {

long d(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");
    return static_cast<long>(k) * (2 * n + 3 - k) / 2;
}

CurveWitness curve_witness(const NodeSet& x, const BivariatePoly& q, int k) {
    if (q.is_zero()) throw std::invalid_argument("zero polynomial");
    if (k < 1 || k > x.degree() || q.degree() != k)
        throw std::invalid_argument("degree out of range");
    if (!is_n_correct(x)) throw std::invalid_argument("not n-correct");

    CurveWitness w;
    w.poly = q;
    w.k = k;
    w.nodes_on = nodes_on_curve(x, q);
    w.is_maximal = static_cast<long>(w.nodes_on.size()) == d(x.degree(), k);
    if (w.is_maximal) {
        std::vector<Point> off = nodes_off_curve(x, q);
        NodeSet complement(x.degree() - k, off);
        w.complement_correct = is_n_correct(complement);
    }
    return w;
}

bool SpecialTriplet::same_nodes(const SpecialTriplet& o) const {
    std::vector<Point> l{a, b, c}, r{o.a, o.b, o.c};
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    return l == r;
}

RationalMatrix monomial_rows(const NodeSet& x, int degree) {
    const long cols = pi_dim(degree);
    RationalMatrix m(static_cast<int>(x.size()), static_cast<int>(cols));
    for (size_t r = 0; r < x.size(); ++r) {
        const Point& p = x.node(r);
        std::vector<Rat> xpow(degree + 1), ypow(degree + 1);
        xpow[0] = 1;
        ypow[0] = 1;
        for (int i = 1; i <= degree; ++i) {
            xpow[i] = xpow[i - 1] * p.x;
            ypow[i] = ypow[i - 1] * p.y;
        }
        int c = 0;
        for (int dd = 0; dd <= degree; ++dd)
            for (int j = 0; j <= dd; ++j) m.at(static_cast<int>(r), c++) = xpow[dd - j] * ypow[j];
    }
    return m;
}

std::optional<SpecialTriplet> detect_special_triplet(const NodeSet& x, const RationalMatrix& rows,
                                                     const Point& a, const Point& b, const Point& c) {
    const int n = x.degree();
    if (n < 2) throw std::invalid_argument("degree must be at least 2");
    if (a == b || a == c || b == c) throw std::invalid_argument("nodes not distinct");
    auto ia = x.index_of(a), ib = x.index_of(b), ic = x.index_of(c);
    if (!ia || !ib || !ic) throw std::invalid_argument("nodes not in set");

    // rows of the Pi_{n-1} basis at X minus {a,b,c}
    const int cols = rows.cols();
    RationalMatrix sub(static_cast<int>(x.size()) - 3, cols);
    int r = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (i == *ia || i == *ib || i == *ic) continue;
        for (int j = 0; j < cols; ++j) sub.at(r, j) = rows.at(static_cast<int>(i), j);
        ++r;
    }

    Elimination e = eliminate(sub);
    if (e.nullspace.empty()) return std::nullopt;
    const auto& basis = e.nullspace;
    const size_t dim = basis.size();

    std::vector<BivariatePoly> basis_polys;
    basis_polys.reserve(dim);
    for (const auto& v : basis) basis_polys.emplace_back(n - 1, v);

    // If every nullspace element vanishes at one of the three nodes, no
    // witness exists and the triplet is not special.
    std::vector<std::vector<Rat>> values(3);
    const Point* pts[3] = {&a, &b, &c};
    for (int t = 0; t < 3; ++t) {
        bool some_nonzero = false;
        for (const auto& bp : basis_polys) {
            values[t].push_back(bp(*pts[t]));
            if (sign(values[t].back()) != 0) some_nonzero = true;
        }
        if (!some_nonzero) return std::nullopt;
    }

    // Sweep f_t = sum_j t^j basis_j. Each node excludes at most dim-1 values
    // of t, so a witness appears within 3*(dim-1)+1 attempts; the hard stop
    // below is the (larger) documented bound.
    const long stop = std::max<long>(3 * static_cast<long>(dim) * (n - 1), 3 * (static_cast<long>(dim) - 1));
    for (long t = 0; t <= stop; ++t) {
        Rat tq(t);
        bool good = true;
        for (int p = 0; p < 3 && good; ++p) {
            Rat acc(0), tp(1);
            for (size_t j = 0; j < dim; ++j) {
                acc += tp * values[p][j];
                tp *= tq;
            }
            good = sign(acc) != 0;
        }
        if (!good) continue;
        std::vector<Rat> coeffs(static_cast<size_t>(cols), Rat(0));
        Rat tp(1);
        for (size_t j = 0; j < dim; ++j) {
            for (int i = 0; i < cols; ++i) coeffs[i] += tp * basis[j][i];
            tp *= tq;
        }
        BivariatePoly f(n - 1, std::move(coeffs));
        return SpecialTriplet{a, b, c, f.normalized()};
    }
    throw std::logic_error("witness sweep exhausted its bound");
}

std::optional<SpecialTriplet> detect_special_triplet(const NodeSet& x, const Point& a,
                                                     const Point& b, const Point& c) {
    if (!is_n_correct(x)) throw std::invalid_argument("not n-correct");
    return detect_special_triplet(x, monomial_rows(x, x.degree() - 1), a, b, c);
}

SpecialTriplet triplet_from_used_2node_line(const NodeSet& x, const UsageRecord& usage) {
    std::vector<Point> on;
    for (const Point& p : x.nodes())
        if (usage.line.contains(p)) on.push_back(p);
    if (on.size() != 2) throw std::invalid_argument("line is not a 2-node line");

    SpecialTriplet t{on[0], on[1], usage.node, usage.quotient.normalized()};
    // X minus f = {a,b,c} is forced (the quotient would otherwise vanish at
    // more than d(n, n-1) independent nodes); verify rather than assume.
    std::vector<Point> off = nodes_off_curve(x, t.f);
    if (off.size() != 3 || !t.has_vertex(off[0]) || !t.has_vertex(off[1]) || !t.has_vertex(off[2]))
        throw std::logic_error("usage quotient is not the associated maximal curve");
    return t;
}

SpecialTriplet orient_common(const SpecialTriplet& t, const Point& common) {
    SpecialTriplet out = t;
    if (out.a == common) std::swap(out.a, out.b);
    if (out.b != common) throw std::invalid_argument("common node is not an a/b vertex");
    return out;
}

namespace {

std::vector<Point> sorted(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool same_point_set(const std::vector<Point>& l, const std::vector<Point>& r) {
    return sorted(l) == sorted(r);
}

std::vector<Point> set_union(const std::vector<Point>& l, const std::vector<Point>& r) {
    std::vector<Point> out = l;
    for (const Point& p : r)
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return out;
}

std::vector<Point> set_minus(const std::vector<Point>& l, const std::vector<Point>& r) {
    std::vector<Point> out;
    for (const Point& p : l)
        if (std::find(r.begin(), r.end(), p) == r.end()) out.push_back(p);
    return out;
}

size_t count_on_line(const std::vector<Point>& pts, const LinearForm& l) {
    size_t k = 0;
    for (const Point& p : pts)
        if (l.contains(p)) ++k;
    return k;
}

}  // namespace

PeelResult peel_decomposition(const NodeSet& x, const CurveWitness& mu, const Point& b,
                              const std::vector<SpecialTriplet>& triplets) {
    const int n = x.degree();
    const int k = mu.k;
    const int m = static_cast<int>(triplets.size());

    if (!mu.is_maximal) throw std::invalid_argument("curve is not maximal");
    if (mu.poly.degree() != k || k < 1 || k > n) throw std::invalid_argument("degree out of range");
    if (!x.contains(b)) throw std::invalid_argument("node not in set");
    if (sign(mu.poly(b)) == 0) throw std::invalid_argument("common node lies on the curve");
    if (m > k) throw std::invalid_argument("more triplets than the curve degree");
    for (int i = 0; i < m; ++i) {
        const SpecialTriplet& t = triplets[i];
        if (t.b != b) throw std::invalid_argument("triplets must share the common node");
        if (!x.contains(t.a) || !x.contains(t.c)) throw std::invalid_argument("nodes not in set");
        if (sign(mu.poly(t.a)) != 0) throw std::invalid_argument("triplet vertex off the curve");
        for (int j = 0; j < i; ++j)
            if (t.same_nodes(triplets[j]))
                throw std::invalid_argument(
                    "duplicate triplets: two special triplets sharing a vertex pair coincide");
    }

    PeelResult out;
    auto fail = [&](int step, const char* stmt, const std::string& what) {
        out.violation = "step " + std::to_string(step) + ", statement (" + stmt + "): " + what;
        out.violated_step = step;
        out.violated_statement = stmt;
    };

    // B = X minus mu is (n-k)-correct since mu is maximal; p*_{B,B-set}
    // drives the trace checks of statement (ii).
    std::vector<Point> b_nodes = nodes_off_curve(x, mu.poly);
    NodeSet b_set(n - k, b_nodes);
    BivariatePoly b_fund = fundamental_polynomial(b_set, b);

    BivariatePoly mu_cur = mu.poly.with_degree_bound(k);
    std::vector<Point> a_cur = nodes_on_curve(x, mu.poly);
    std::vector<Point> b_cur = b_nodes;
    std::vector<LinearForm> lines;

    for (int i = 1; i <= m; ++i) {
        const SpecialTriplet& t = triplets[i - 1];

        // (i) l_i = l_{A_i C_i} divides mu_{k-i+1}; B off l_i; C_i still on the curve
        LinearForm li = line_through(t.a, t.c);
        for (const LinearForm& prev : lines) {
            if (prev == li) {
                fail(i, "i", "line " + to_string(li) + " repeats an earlier component");
                return out;
            }
        }
        auto quotient = divide_by_linear(mu_cur, li);
        if (!quotient) {
            fail(i, "i", "line " + to_string(li) + " is not a component of the remaining curve");
            return out;
        }
        if (li.contains(b)) {
            fail(i, "i", "common node " + to_string(b) + " lies on " + to_string(li));
            return out;
        }
        if (std::find(a_cur.begin(), a_cur.end(), t.c) == a_cur.end()) {
            fail(i, "i", "vertex " + to_string(t.c) + " is not on the remaining curve");
            return out;
        }
        BivariatePoly mu_next = *quotient;

        // moreover-part of (i): vertices of other triplets avoid l_i and vice versa
        for (int j = 1; j < i; ++j) {
            const SpecialTriplet& s = triplets[j - 1];
            if (li.contains(s.a) || li.contains(s.c)) {
                fail(i, "i", "vertices of triplet " + std::to_string(j) + " meet " + to_string(li));
                return out;
            }
            if (lines[j - 1].contains(t.a) || lines[j - 1].contains(t.c)) {
                fail(i, "i", "vertices of triplet " + std::to_string(i) + " meet " + to_string(lines[j - 1]));
                return out;
            }
        }

        // (ii) the trace on l_i: A_i, C_i, the n-k zeros of p*_{B,B-set}, and
        // the i-1 intersections with the earlier lines
        std::vector<Point> trace;
        for (const Point& p : x.nodes())
            if (li.contains(p) && sign(mu_next(p)) != 0) trace.push_back(p);
        const size_t expected = static_cast<size_t>(n - k + i + 1);
        if (trace.size() != expected) {
            fail(i, "ii", "trace has " + std::to_string(trace.size()) + " nodes, expected " +
                              std::to_string(expected));
            return out;
        }
        if (std::find(trace.begin(), trace.end(), t.a) == trace.end() ||
            std::find(trace.begin(), trace.end(), t.c) == trace.end()) {
            fail(i, "ii", "trace misses a triplet vertex");
            return out;
        }
        std::vector<Point> inters;
        bool bad = false;
        for (int j = 1; j < i && !bad; ++j) {
            auto dij = intersect(li, lines[j - 1]);
            if (!dij) {
                fail(i, "ii", "component lines " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are parallel");
                bad = true;
                break;
            }
            if (std::find(trace.begin(), trace.end(), *dij) == trace.end()) {
                fail(i, "ii", "intersection point " + to_string(*dij) + " is not a trace node");
                bad = true;
                break;
            }
            if (*dij == t.a || *dij == t.c ||
                std::find(inters.begin(), inters.end(), *dij) != inters.end()) {
                fail(i, "ii", "intersection point " + to_string(*dij) + " collides");
                bad = true;
                break;
            }
            inters.push_back(*dij);
        }
        if (bad) return out;
        std::vector<Point> zeros = set_minus(set_minus(trace, {t.a, t.c}), inters);
        if (zeros.size() != static_cast<size_t>(n - k)) {
            fail(i, "ii", "found " + std::to_string(zeros.size()) + " extra trace nodes, expected " +
                              std::to_string(n - k));
            return out;
        }
        for (const Point& z : zeros) {
            if (sign(b_fund(z)) != 0) {
                fail(i, "ii", "trace node " + to_string(z) + " is not a zero of the complement fundamental");
                return out;
            }
        }
        bool restriction_zero = true;
        for (const Rat& cc : restrict_to_line(b_fund, li))
            if (sign(cc) != 0) { restriction_zero = false; break; }
        if (restriction_zero) {
            fail(i, "ii", "complement fundamental vanishes identically on " + to_string(li));
            return out;
        }

        // (iii) mu_{k-i} is a maximal curve of degree k-i
        std::vector<Point> a_next = nodes_on_curve(x, mu_next);
        if (k - i > 0) {
            if (mu_next.degree() != k - i) {
                fail(i, "iii", "remaining curve has degree " + std::to_string(mu_next.degree()));
                return out;
            }
            if (static_cast<long>(a_next.size()) != d(n, k - i)) {
                fail(i, "iii", "remaining curve passes through " + std::to_string(a_next.size()) +
                                   " nodes, expected " + std::to_string(d(n, k - i)));
                return out;
            }
        } else if (mu_next.degree() != 0) {
            fail(i, "iii", "final quotient is not a nonzero constant");
            return out;
        }

        // (iv) B_{n-k+i} = X minus mu_{k-i} is correct and l_i is maximal in it
        std::vector<Point> b_next = nodes_off_curve(x, mu_next);
        if (!same_point_set(b_next, set_union(b_cur, trace))) {
            fail(i, "iv", "complement is not the union of the previous complement and the trace");
            return out;
        }
        if (!is_n_correct(NodeSet(n - k + i, b_next))) {
            fail(i, "iv", "complement is not " + std::to_string(n - k + i) + "-correct");
            return out;
        }
        if (count_on_line(b_next, li) != static_cast<size_t>(n - k + i + 1)) {
            fail(i, "iv", "line " + to_string(li) + " is not maximal in the complement");
            return out;
        }

        // (v) A_{k-i} = A_{k-i+1} minus the trace
        if (!same_point_set(a_next, set_minus(a_cur, trace))) {
            fail(i, "v", "curve-side nodes differ from the previous ones minus the trace");
            return out;
        }

        out.states.push_back(DecompositionState{i, li, mu_next, a_next, b_next, trace, inters});

        lines.push_back(li);
        mu_cur = mu_next;
        a_cur = std::move(a_next);
        b_cur = std::move(b_next);
    }

    // (vi) every l_i stays maximal in each later complement B_{n-k+s}
    for (int i = 1; i <= m; ++i) {
        for (int s = i; s <= m; ++s) {
            size_t on = count_on_line(out.states[s - 1].b_part, out.states[i - 1].line);
            if (on != static_cast<size_t>(n - k + s + 1)) {
                fail(i, "vi", "line " + to_string(out.states[i - 1].line) + " carries " +
                                  std::to_string(on) + " nodes of complement " + std::to_string(s) +
                                  ", expected " + std::to_string(n - k + s + 1));
                return out;
            }
        }
    }
    return out;
}

}  // namespace gcset
