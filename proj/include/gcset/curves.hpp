#pragma once

#include "gcset/lines.hpp"
#include "gcset/nodeset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcset {

// d(n,k) = dim Pi_n - dim Pi_{n-k} = k(2n+3-k)/2, the maximum number of
// n-independent nodes a degree-k curve can carry. Requires 1 <= k <= n.
long d(int n, int k);

struct CurveWitness {
    BivariatePoly poly;
    int k = 0;
    std::vector<Point> nodes_on;
    bool is_maximal = false;
    // set when is_maximal: the complement is an (n-k)-correct set
    std::optional<bool> complement_correct;
};

// Incidence list and maximality of a degree-k curve against an n-correct set.
CurveWitness curve_witness(const NodeSet& x, const BivariatePoly& q, int k);

// {a,b,c} with the associated maximal curve f of degree n-1: X minus f = {a,b,c}.
struct SpecialTriplet {
    Point a;
    Point b;
    Point c;
    BivariatePoly f;

    // unordered vertex-set equality
    bool same_nodes(const SpecialTriplet& o) const;
    bool has_vertex(const Point& p) const { return p == a || p == b || p == c; }
};

// Evaluation rows of the Pi_degree monomial basis at every node of x;
// row i corresponds to node i.
RationalMatrix monomial_rows(const NodeSet& x, int degree);

// Nullspace-based detection: the triplet is special iff some element of
// {f in Pi_{n-1} : f = 0 on X minus {a,b,c}} is nonzero at each of a, b, c.
// A witness is built by a deterministic sweep over combinations
// sum_j t^j basis_j for t = 0, 1, 2, ...; requires degree >= 2.
std::optional<SpecialTriplet> detect_special_triplet(const NodeSet& x, const Point& a,
                                                     const Point& b, const Point& c);
std::optional<SpecialTriplet> detect_special_triplet(const NodeSet& x, const RationalMatrix& rows,
                                                     const Point& a, const Point& b, const Point& c);

// Lemma route: a 2-node line through a and b used by c yields the special
// triplet {a,b,c} with f = the usage quotient (canonically rescaled).
SpecialTriplet triplet_from_used_2node_line(const NodeSet& x, const UsageRecord& usage);

// Same triplet with `common` moved into the b slot (peel callers put the
// shared node there); common must be the a or b vertex.
SpecialTriplet orient_common(const SpecialTriplet& t, const Point& common);

// One step of the peel of a maximal curve, as in the multi-triplet
// decomposition: the removed line, the remaining curve, the A/B partition,
// the trace set on the line, and the intersection points with earlier lines.
struct DecompositionState {
    int step = 0;                      // 1-based
    LinearForm line;                   // l_i
    BivariatePoly mu_rest;             // mu_{k-i}
    std::vector<Point> a_part;         // X on mu_{k-i}
    std::vector<Point> b_part;         // X off mu_{k-i}
    std::vector<Point> trace;          // nodes on l_i where mu_{k-i} is nonzero
    std::vector<Point> intersections;  // D_{ij} = l_i cap l_j, j < i
};

struct PeelResult {
    std::vector<DecompositionState> states;
    // first violated statement, if any; this is the theorem checker, so
    // violations are reported rather than thrown
    std::optional<std::string> violation;
    std::optional<int> violated_step;            // 1-based
    std::optional<std::string> violated_statement;  // "i".."vi"

    bool ok() const { return !violation.has_value(); }
};

// Verifies statements (i)-(vi) of the multi-triplet decomposition for the
// given maximal curve mu, common node b off mu, and claimed special triplets
// {a_i, b, c_i} with a_i on mu. Malformed inputs (b on mu, duplicate
// triplets, m > k, ...) throw std::invalid_argument; mathematical violations
// land in the result.
PeelResult peel_decomposition(const NodeSet& x, const CurveWitness& mu, const Point& b,
                              const std::vector<SpecialTriplet>& triplets);

}  // namespace gcset
