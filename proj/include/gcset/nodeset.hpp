#pragma once

#include "gcset/linalg.hpp"
#include "gcset/poly.hpp"

#include <optional>
#include <vector>

namespace gcset {

// An interpolation node set: a degree and a list of pairwise distinct
// rational points. The count is not tied to dim Pi_n here; operations that
// need an n-correct set enforce that themselves. Degree 0 (a single-node,
// 0-correct set) is admitted because complements of maximal curves reach it.
class NodeSet {
public:
    NodeSet(int degree, std::vector<Point> nodes);

    int degree() const { return degree_; }
    long correct_size() const { return pi_dim(degree_); }
    size_t size() const { return nodes_.size(); }
    const std::vector<Point>& nodes() const { return nodes_; }
    const Point& node(size_t i) const { return nodes_[i]; }

    std::optional<size_t> index_of(const Point& p) const;
    bool contains(const Point& p) const { return index_of(p).has_value(); }

private:
    int degree_;
    std::vector<Point> nodes_;
};

// #nodes x dim Pi_n matrix; row i holds the graded-lex monomial values at node i.
RationalMatrix vandermonde(const NodeSet& x);

// every node admits a fundamental polynomial <=> full row rank
bool is_n_independent(const NodeSet& x);

// #nodes = dim Pi_n and the Vandermonde determinant is nonzero
bool is_n_correct(const NodeSet& x);

// Unique p in Pi_n with p(node_i) = values[i]; requires an n-correct set.
BivariatePoly interpolate(const NodeSet& x, const std::vector<Rat>& values);

// Unique p in Pi_n with p = 1 at node a, p = 0 on the rest.
BivariatePoly fundamental_polynomial(const NodeSet& x, const Point& a);

// Nodes of x on / off the zero set of q, preserving node order.
std::vector<Point> nodes_on_curve(const NodeSet& x, const BivariatePoly& q);
std::vector<Point> nodes_off_curve(const NodeSet& x, const BivariatePoly& q);

}  // namespace gcset
