#include "gcset/nodeset.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcset {

NodeSet::NodeSet(int degree, std::vector<Point> nodes)
    : degree_(degree), nodes_(std::move(nodes)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (nodes_.empty()) throw std::invalid_argument("empty node set");
    std::vector<Point> sorted = nodes_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) throw std::invalid_argument("duplicate node");
}

std::optional<size_t> NodeSet::index_of(const Point& p) const {
    for (size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i] == p) return i;
    return std::nullopt;
}

RationalMatrix vandermonde(const NodeSet& x) {
    const int n = x.degree();
    const long cols = pi_dim(n);
    RationalMatrix m(static_cast<int>(x.size()), static_cast<int>(cols));
    for (size_t r = 0; r < x.size(); ++r) {
        const Point& p = x.node(r);
        std::vector<Rat> xpow(n + 1), ypow(n + 1);
        xpow[0] = 1;
        ypow[0] = 1;
        for (int i = 1; i <= n; ++i) {
            xpow[i] = xpow[i - 1] * p.x;
            ypow[i] = ypow[i - 1] * p.y;
        }
        int c = 0;
        for (int d = 0; d <= n; ++d)
            for (int j = 0; j <= d; ++j) m.at(static_cast<int>(r), c++) = xpow[d - j] * ypow[j];
    }
    return m;
}

bool is_n_independent(const NodeSet& x) {
    if (static_cast<long>(x.size()) > x.correct_size()) return false;
    return eliminate(vandermonde(x)).rank == static_cast<int>(x.size());
}

bool is_n_correct(const NodeSet& x) {
    if (static_cast<long>(x.size()) != x.correct_size()) return false;
    return eliminate(vandermonde(x)).rank == static_cast<int>(x.size());
}

BivariatePoly interpolate(const NodeSet& x, const std::vector<Rat>& values) {
    if (values.size() != x.size()) throw std::invalid_argument("value count does not match node count");
    if (!is_n_correct(x)) throw std::invalid_argument("not n-correct");
    Elimination e = eliminate(vandermonde(x), values);
    return BivariatePoly(x.degree(), *e.solution);
}

BivariatePoly fundamental_polynomial(const NodeSet& x, const Point& a) {
    auto idx = x.index_of(a);
    if (!idx) throw std::invalid_argument("node not in set");
    if (!is_n_correct(x)) throw std::invalid_argument("not n-correct");
    std::vector<Rat> values(x.size(), Rat(0));
    values[*idx] = 1;
    Elimination e = eliminate(vandermonde(x), values);
    return BivariatePoly(x.degree(), *e.solution);
}

std::vector<Point> nodes_on_curve(const NodeSet& x, const BivariatePoly& q) {
    std::vector<Point> out;
    for (const Point& p : x.nodes())
        if (sign(q(p)) == 0) out.push_back(p);
    return out;
}

std::vector<Point> nodes_off_curve(const NodeSet& x, const BivariatePoly& q) {
    std::vector<Point> out;
    for (const Point& p : x.nodes())
        if (sign(q(p)) != 0) out.push_back(p);
    return out;
}

}  // namespace gcset
