#pragma once

#include "gcset/nodeset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcset {

// A line through at least two nodes, with its exact incidence list
// (in node order). k = nodes_on.size().
struct LineCensusEntry {
    LinearForm line;
    std::vector<Point> nodes_on;

    size_t k() const { return nodes_on.size(); }
};

// node uses line: p*_node = line * quotient exactly
struct UsageRecord {
    Point node;
    LinearForm line;
    BivariatePoly quotient;
};

struct TwoNodeLineUsage {
    Point a;          // the node sharing the line with the query node
    LinearForm line;  // the 2-node line itself
    Point c;          // the node using it
    BivariatePoly quotient;
};

enum class SetClass { NotCorrect, CorrectNonGC, GC_Other, CarnicerGasca, ChungYao };

std::string to_string(SetClass c);

// All distinct lines through >= 2 nodes, sorted by normalized coefficients.
std::vector<LineCensusEntry> line_census(const NodeSet& x);

// Census entries with k = degree + 1; requires an n-correct set.
std::vector<LinearForm> maximal_lines(const NodeSet& x);

// Divisibility of a given fundamental polynomial: the workhorse behind
// node_uses_line, for callers that batch-precompute fundamentals.
std::optional<UsageRecord> usage_from(const BivariatePoly& fundamental, const Point& node,
                                      const LinearForm& line);

std::optional<UsageRecord> node_uses_line(const NodeSet& x, const Point& a, const LinearForm& line);

// Greedy extraction of a full linear factorization of p from a candidate
// pool; complete because linear factorizations are unique up to scalars.
// Candidates are tried in the given order; a factor may repeat.
std::optional<std::vector<LinearForm>> factor_into_lines(const BivariatePoly& p,
                                                         const std::vector<LinearForm>& candidates);

// The n lines whose product is proportional to p*_a, or nullopt when no such
// factorization exists over the census lines of x minus a. Any linear factor
// of a GC fundamental polynomial passes through >= 2 nodes, so the census
// pool is exhaustive for GC sets; for non-GC sets absence means "not found
// via census".
std::optional<std::vector<LinearForm>> gc_factorization(const NodeSet& x, const Point& a);
std::optional<std::vector<LinearForm>> gc_factorization(const NodeSet& x, const Point& a,
                                                        const BivariatePoly& fundamental,
                                                        const std::vector<LineCensusEntry>& census);

bool is_gc_set(const NodeSet& x);

// Classification by correctness, the GC property, and the maximal-line count
// (n+2 = Chung-Yao, n+1 = Carnicer-Gasca, fewer = GC_Other).
SetClass classify(const NodeSet& x);

// All used 2-node census lines through b: the second node a, the line, and
// the node c using it. Requires an n-correct set containing b.
std::vector<TwoNodeLineUsage> used_two_node_lines_through(const NodeSet& x, const Point& b);
std::vector<TwoNodeLineUsage> used_two_node_lines_through(const NodeSet& x, const Point& b,
                                                          const std::vector<BivariatePoly>& fundamentals,
                                                          const std::vector<LineCensusEntry>& census);

}  // namespace gcset
