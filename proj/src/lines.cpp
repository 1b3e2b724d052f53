#include "gcset/lines.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gcset {

std::string to_string(SetClass c) {
    switch (c) {
        case SetClass::NotCorrect: return "NotCorrect";
        case SetClass::CorrectNonGC: return "CorrectNonGC";
        case SetClass::GC_Other: return "GC_Other";
        case SetClass::CarnicerGasca: return "CarnicerGasca";
        case SetClass::ChungYao: return "ChungYao";
    }
    return "?";
}

std::vector<LineCensusEntry> line_census(const NodeSet& x) {
    std::map<LinearForm, std::vector<Point>> seen;
    const auto& nodes = x.nodes();
    for (size_t i = 0; i < nodes.size(); ++i) {
        for (size_t j = i + 1; j < nodes.size(); ++j) {
            LinearForm l = line_through(nodes[i], nodes[j]);
            auto it = seen.find(l);
            if (it != seen.end()) continue;
            std::vector<Point> on;
            for (const Point& p : nodes)
                if (l.contains(p)) on.push_back(p);
            seen.emplace(std::move(l), std::move(on));
        }
    }
    std::vector<LineCensusEntry> out;
    out.reserve(seen.size());
    for (auto& [line, on] : seen) out.push_back(LineCensusEntry{line, on});
    return out;
}

std::vector<LinearForm> maximal_lines(const NodeSet& x) {
    if (!is_n_correct(x)) throw std::invalid_argument("not n-correct");
    std::vector<LinearForm> out;
    for (const auto& e : line_census(x))
        if (e.k() == static_cast<size_t>(x.degree()) + 1) out.push_back(e.line);
    return out;
}

std::optional<UsageRecord> usage_from(const BivariatePoly& fundamental, const Point& node,
                                      const LinearForm& line) {
    // the node itself on the line rules divisibility out: p*(node) = 1 != 0
    if (line.contains(node)) return std::nullopt;
    // cheap reject: a divisor restricts to the zero polynomial on its line
    for (const Rat& c : restrict_to_line(fundamental, line))
        if (sign(c) != 0) return std::nullopt;
    auto q = divide_by_linear(fundamental, line);
    if (!q) throw std::logic_error("restriction vanished but division failed");
    return UsageRecord{node, line, *q};
}

std::optional<UsageRecord> node_uses_line(const NodeSet& x, const Point& a, const LinearForm& line) {
    if (!x.contains(a)) throw std::invalid_argument("node not in set");
    return usage_from(fundamental_polynomial(x, a), a, line);
}

std::optional<std::vector<LinearForm>> factor_into_lines(const BivariatePoly& p,
                                                         const std::vector<LinearForm>& candidates) {
    int degree = p.degree();
    if (degree < 0) throw std::invalid_argument("zero polynomial");
    std::vector<LinearForm> factors;
    BivariatePoly rest = p;
    for (const LinearForm& l : candidates) {
        while (rest.degree() > 0) {
            bool restriction_zero = true;
            for (const Rat& c : restrict_to_line(rest, l))
                if (sign(c) != 0) { restriction_zero = false; break; }
            if (!restriction_zero) break;
            auto q = divide_by_linear(rest, l);
            if (!q) break;
            factors.push_back(l);
            rest = *q;
        }
        if (rest.degree() == 0) break;
    }
    if (rest.degree() != 0) return std::nullopt;
    return factors;
}

namespace {

// candidate pool for gc_factorization: census lines still carrying >= 2
// nodes once `a` is removed, ordered by (k descending, normalized coefficients)
std::vector<LinearForm> census_candidates_without(const std::vector<LineCensusEntry>& census,
                                                  const Point& a) {
    std::vector<std::pair<size_t, LinearForm>> ranked;
    for (const auto& e : census) {
        size_t k = e.k();
        for (const Point& p : e.nodes_on)
            if (p == a) { --k; break; }
        if (k >= 2) ranked.emplace_back(k, e.line);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& l, const auto& r) {
        if (l.first != r.first) return l.first > r.first;
        return l.second < r.second;
    });
    std::vector<LinearForm> out;
    out.reserve(ranked.size());
    for (auto& [k, line] : ranked) out.push_back(line);
    return out;
}

}  // namespace

std::optional<std::vector<LinearForm>> gc_factorization(const NodeSet& x, const Point& a,
                                                        const BivariatePoly& fundamental,
                                                        const std::vector<LineCensusEntry>& census) {
    if (!x.contains(a)) throw std::invalid_argument("node not in set");
    return factor_into_lines(fundamental, census_candidates_without(census, a));
}

std::optional<std::vector<LinearForm>> gc_factorization(const NodeSet& x, const Point& a) {
    if (!x.contains(a)) throw std::invalid_argument("node not in set");
    return gc_factorization(x, a, fundamental_polynomial(x, a), line_census(x));
}

bool is_gc_set(const NodeSet& x) {
    if (!is_n_correct(x)) throw std::invalid_argument("not n-correct");
    auto census = line_census(x);
    for (const Point& p : x.nodes())
        if (!gc_factorization(x, p, fundamental_polynomial(x, p), census)) return false;
    return true;
}

SetClass classify(const NodeSet& x) {
    if (!is_n_correct(x)) return SetClass::NotCorrect;
    if (!is_gc_set(x)) return SetClass::CorrectNonGC;
    size_t maximal = maximal_lines(x).size();
    size_t n = static_cast<size_t>(x.degree());
    if (maximal == n + 2) return SetClass::ChungYao;
    if (maximal == n + 1) return SetClass::CarnicerGasca;
    return SetClass::GC_Other;
}

std::vector<TwoNodeLineUsage> used_two_node_lines_through(const NodeSet& x, const Point& b,
                                                          const std::vector<BivariatePoly>& fundamentals,
                                                          const std::vector<LineCensusEntry>& census) {
    if (!x.contains(b)) throw std::invalid_argument("node not in set");
    std::vector<TwoNodeLineUsage> out;
    for (const auto& e : census) {
        if (e.k() != 2) continue;
        const Point* other = nullptr;
        bool through_b = false;
        for (const Point& p : e.nodes_on) {
            if (p == b)
                through_b = true;
            else
                other = &p;
        }
        if (!through_b) continue;
        for (size_t i = 0; i < x.size(); ++i) {
            auto usage = usage_from(fundamentals[i], x.node(i), e.line);
            if (usage) out.push_back(TwoNodeLineUsage{*other, e.line, x.node(i), usage->quotient});
        }
    }
    return out;
}

std::vector<TwoNodeLineUsage> used_two_node_lines_through(const NodeSet& x, const Point& b) {
    if (!is_n_correct(x)) throw std::invalid_argument("not n-correct");
    std::vector<BivariatePoly> funds;
    funds.reserve(x.size());
    for (const Point& p : x.nodes()) funds.push_back(fundamental_polynomial(x, p));
    return used_two_node_lines_through(x, b, funds, line_census(x));
}

}  // namespace gcset
