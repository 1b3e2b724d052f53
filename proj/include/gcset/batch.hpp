#pragma once

#include "gcset/curves.hpp"
#include "gcset/lines.hpp"
#include "gcset/nodeset.hpp"

#include <vector>

namespace gcset {

// Execution policy for the batch kernels. The serial path is the reference
// implementation; the parallel path runs the same per-item body under an
// OpenMP loop and must produce identical results, which the test suite and
// the benchmark tool both check.
enum class Exec { serial, parallel };

// All fundamental polynomials of an n-correct set, indexed by node order.
// Each slot is an independent exact solve, so the result does not depend on
// the execution policy.
std::vector<BivariatePoly> all_fundamentals(const NodeSet& x, Exec exec = Exec::parallel);

// Every special triplet of the set, found by scanning all node triples
// (i < j < k in node order); requires degree >= 2 and an n-correct set.
std::vector<SpecialTriplet> scan_special_triplets(const NodeSet& x, Exec exec = Exec::parallel);

// usage_table[l] lists the indices of the nodes using census line l.
std::vector<std::vector<size_t>> usage_table(const NodeSet& x,
                                             const std::vector<LineCensusEntry>& census,
                                             const std::vector<BivariatePoly>& fundamentals,
                                             Exec exec = Exec::parallel);

}  // namespace gcset
