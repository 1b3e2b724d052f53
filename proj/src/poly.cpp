#include "gcset/poly.hpp"

#include <stdexcept>

namespace gcset {

BivariatePoly::BivariatePoly(int degree_bound)
    : degree_bound_(degree_bound), coeffs_(static_cast<size_t>(pi_dim(degree_bound))) {
    if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
}

BivariatePoly::BivariatePoly(int degree_bound, std::vector<Rat> coeffs)
    : degree_bound_(degree_bound), coeffs_(std::move(coeffs)) {
    if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
    if (coeffs_.size() != static_cast<size_t>(pi_dim(degree_bound)))
        throw std::invalid_argument("coefficient count does not match degree bound");
}

BivariatePoly BivariatePoly::constant(int degree_bound, const Rat& value) {
    BivariatePoly p(degree_bound);
    p.coeffs_[0] = value;
    return p;
}

BivariatePoly BivariatePoly::from_linear(const LinearForm& line) {
    BivariatePoly p(1);
    p.coeffs_[0] = line.c();
    p.coeffs_[1] = line.a();
    p.coeffs_[2] = line.b();
    return p;
}

int BivariatePoly::degree() const {
    for (int d = degree_bound_; d >= 0; --d) {
        size_t offset = static_cast<size_t>(d) * (d + 1) / 2;
        for (int j = 0; j <= d; ++j)
            if (sign(coeffs_[offset + j]) != 0) return d;
    }
    return -1;
}

const Rat& BivariatePoly::coeff(int i, int j) const {
    static const Rat zero(0);
    if (i < 0 || j < 0 || i + j > degree_bound_) return zero;
    return coeffs_[monomial_index(i, j)];
}

void BivariatePoly::set_coeff(int i, int j, const Rat& value) {
    if (i < 0 || j < 0 || i + j > degree_bound_)
        throw std::out_of_range("monomial exceeds degree bound");
    coeffs_[monomial_index(i, j)] = value;
}

Rat BivariatePoly::operator()(const Point& p) const {
    std::vector<Rat> xpow(degree_bound_ + 1), ypow(degree_bound_ + 1);
    xpow[0] = 1;
    ypow[0] = 1;
    for (int i = 1; i <= degree_bound_; ++i) {
        xpow[i] = xpow[i - 1] * p.x;
        ypow[i] = ypow[i - 1] * p.y;
    }
    Rat acc(0);
    size_t idx = 0;
    for (int d = 0; d <= degree_bound_; ++d)
        for (int j = 0; j <= d; ++j, ++idx)
            if (sign(coeffs_[idx]) != 0) acc += coeffs_[idx] * xpow[d - j] * ypow[j];
    return acc;
}

BivariatePoly BivariatePoly::with_degree_bound(int m) const {
    if (m < degree()) throw std::invalid_argument("degree bound below effective degree");
    BivariatePoly out(m);
    int top = std::min(m, degree_bound_);
    for (int d = 0; d <= top; ++d)
        for (int j = 0; j <= d; ++j) out.coeffs_[monomial_index(d - j, j)] = coeff(d - j, j);
    return out;
}

BivariatePoly BivariatePoly::normalized() const {
    for (const Rat& c : coeffs_) {
        if (sign(c) != 0) {
            Rat inv = 1 / c;
            return *this * inv;
        }
    }
    return *this;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    int m = std::max(degree_bound_, o.degree_bound_);
    BivariatePoly out = with_degree_bound(m);
    for (int d = 0; d <= o.degree_bound_; ++d)
        for (int j = 0; j <= d; ++j) out.coeffs_[monomial_index(d - j, j)] += o.coeff(d - j, j);
    return out;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    int m = std::max(degree_bound_, o.degree_bound_);
    BivariatePoly out = with_degree_bound(m);
    for (int d = 0; d <= o.degree_bound_; ++d)
        for (int j = 0; j <= d; ++j) out.coeffs_[monomial_index(d - j, j)] -= o.coeff(d - j, j);
    return out;
}

BivariatePoly BivariatePoly::operator*(const Rat& s) const {
    BivariatePoly out(*this);
    for (Rat& c : out.coeffs_) c *= s;
    return out;
}

bool BivariatePoly::operator==(const BivariatePoly& o) const {
    int m = std::max(degree_bound_, o.degree_bound_);
    for (int d = 0; d <= m; ++d)
        for (int j = 0; j <= d; ++j)
            if (coeff(d - j, j) != o.coeff(d - j, j)) return false;
    return true;
}

BivariatePoly multiply(const BivariatePoly& p, const BivariatePoly& q) {
    BivariatePoly out(p.degree_bound() + q.degree_bound());
    for (int dp = 0; dp <= p.degree_bound(); ++dp) {
        for (int jp = 0; jp <= dp; ++jp) {
            const Rat& cp = p.coeff(dp - jp, jp);
            if (sign(cp) == 0) continue;
            for (int dq = 0; dq <= q.degree_bound(); ++dq) {
                for (int jq = 0; jq <= dq; ++jq) {
                    const Rat& cq = q.coeff(dq - jq, jq);
                    if (sign(cq) == 0) continue;
                    int i = (dp - jp) + (dq - jq);
                    int j = jp + jq;
                    out.set_coeff(i, j, out.coeff(i, j) + cp * cq);
                }
            }
        }
    }
    return out;
}

namespace {

// p(ax*U + bx*V + cx, ay*U + by*V + cy), exact expansion
BivariatePoly compose_affine(const BivariatePoly& p, const Rat& ax, const Rat& bx, const Rat& cx,
                             const Rat& ay, const Rat& by, const Rat& cy) {
    int n = p.degree_bound();
    BivariatePoly lin_x(1), lin_y(1);
    lin_x.set_coeff(0, 0, cx);
    lin_x.set_coeff(1, 0, ax);
    lin_x.set_coeff(0, 1, bx);
    lin_y.set_coeff(0, 0, cy);
    lin_y.set_coeff(1, 0, ay);
    lin_y.set_coeff(0, 1, by);

    std::vector<BivariatePoly> xpow, ypow;
    xpow.reserve(n + 1);
    ypow.reserve(n + 1);
    xpow.push_back(BivariatePoly::constant(0, Rat(1)));
    ypow.push_back(BivariatePoly::constant(0, Rat(1)));
    for (int i = 1; i <= n; ++i) {
        xpow.push_back(multiply(xpow.back(), lin_x));
        ypow.push_back(multiply(ypow.back(), lin_y));
    }

    BivariatePoly out(n);
    for (int d = 0; d <= n; ++d) {
        for (int j = 0; j <= d; ++j) {
            const Rat& c = p.coeff(d - j, j);
            if (sign(c) == 0) continue;
            out = out + multiply(xpow[d - j], ypow[j]) * c;
        }
    }
    return out.with_degree_bound(n);
}

}  // namespace

std::optional<BivariatePoly> divide_by_linear(const BivariatePoly& p, const LinearForm& line) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    int n = p.degree_bound();
    if (n < 1) return std::nullopt;

    // Send the line to the first coordinate: u = a*x + b*y + c. Normalization
    // guarantees a = 1 or (a = 0, b = 1), so the substitution is invertible.
    bool a_leads = sign(line.a()) != 0;
    BivariatePoly in_uv = a_leads
        // x = u - b*v - c, y = v
        ? compose_affine(p, Rat(1), -line.b(), -line.c(), Rat(0), Rat(1), Rat(0))
        // x = v, y = u - c
        : compose_affine(p, Rat(0), Rat(1), Rat(0), Rat(1), Rat(0), -line.c());

    // divisible by u exactly when every u^0 coefficient vanishes
    for (int j = 0; j <= n; ++j)
        if (sign(in_uv.coeff(0, j)) != 0) return std::nullopt;

    BivariatePoly q_uv(n - 1);
    for (int d = 0; d <= n - 1; ++d)
        for (int j = 0; j <= d; ++j) q_uv.set_coeff(d - j, j, in_uv.coeff(d - j + 1, j));

    BivariatePoly q = a_leads
        // u = x + b*y + c, v = y
        ? compose_affine(q_uv, Rat(1), line.b(), line.c(), Rat(0), Rat(1), Rat(0))
        // u = y + c, v = x
        : compose_affine(q_uv, Rat(0), Rat(1), line.c(), Rat(1), Rat(0), Rat(0));
    return q;
}

std::vector<Rat> restrict_to_line(const BivariatePoly& p, const LinearForm& line) {
    int n = p.degree_bound();
    Point p0 = line.param_origin();
    Point dir = line.param_direction();

    // univariate powers of x(t) = p0.x + t*dir.x and y(t) = p0.y + t*dir.y
    std::vector<std::vector<Rat>> xpow(n + 1), ypow(n + 1);
    xpow[0] = {Rat(1)};
    ypow[0] = {Rat(1)};
    for (int i = 1; i <= n; ++i) {
        xpow[i].assign(i + 1, Rat(0));
        ypow[i].assign(i + 1, Rat(0));
        for (int t = 0; t < i; ++t) {
            xpow[i][t] += xpow[i - 1][t] * p0.x;
            xpow[i][t + 1] += xpow[i - 1][t] * dir.x;
            ypow[i][t] += ypow[i - 1][t] * p0.y;
            ypow[i][t + 1] += ypow[i - 1][t] * dir.y;
        }
    }

    std::vector<Rat> out(n + 1, Rat(0));
    for (int d = 0; d <= n; ++d) {
        for (int j = 0; j <= d; ++j) {
            const Rat& c = p.coeff(d - j, j);
            if (sign(c) == 0) continue;
            const auto& xs = xpow[d - j];
            const auto& ys = ypow[j];
            for (size_t u = 0; u < xs.size(); ++u) {
                if (sign(xs[u]) == 0) continue;
                for (size_t v = 0; v < ys.size(); ++v) {
                    if (sign(ys[v]) == 0) continue;
                    out[u + v] += c * xs[u] * ys[v];
                }
            }
        }
    }
    return out;
}

bool proportional(const BivariatePoly& p, const BivariatePoly& q) {
    int dp = p.degree();
    int dq = q.degree();
    if (dp < 0 || dq < 0) return dp == dq;
    if (dp != dq) return false;
    // scale q by the ratio of the first nonzero coefficients and compare
    int m = std::max(p.degree_bound(), q.degree_bound());
    Rat scale(0);
    for (int d = 0; d <= m && sign(scale) == 0; ++d) {
        for (int j = 0; j <= d; ++j) {
            const Rat& cp = p.coeff(d - j, j);
            const Rat& cq = q.coeff(d - j, j);
            if (sign(cp) == 0 && sign(cq) == 0) continue;
            if (sign(cp) == 0 || sign(cq) == 0) return false;
            scale = cp / cq;
            break;
        }
    }
    if (sign(scale) == 0) return true;  // both zero
    for (int d = 0; d <= m; ++d)
        for (int j = 0; j <= d; ++j)
            if (p.coeff(d - j, j) != q.coeff(d - j, j) * scale) return false;
    return true;
}

std::string to_string(const BivariatePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = 0; d <= p.degree_bound(); ++d) {
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            const Rat& c = p.coeff(i, j);
            if (sign(c) == 0) continue;
            Rat ac = abs(c);
            if (out.empty()) {
                if (sign(c) < 0) out += "-";
            } else {
                out += sign(c) < 0 ? " - " : " + ";
            }
            std::string mono;
            if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
            if (j > 0) {
                if (!mono.empty()) mono += "*";
                mono += j == 1 ? "y" : "y^" + std::to_string(j);
            }
            if (mono.empty()) {
                out += to_string(ac);
            } else {
                if (ac != 1) out += to_string(ac) + "*";
                out += mono;
            }
        }
    }
    return out;
}

}  // namespace gcset
