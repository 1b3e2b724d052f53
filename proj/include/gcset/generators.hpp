#pragma once

#include "gcset/nodeset.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gcset {

struct LineArrangement {
    std::vector<LinearForm> lines;
    bool general_position = false;
};

// No two parallel, no three concurrent; exact pair and triple tests.
bool check_general_position(const std::vector<LinearForm>& lines);

// Intersections of n+2 general-position lines: the classical GC_n family
// with n+2 maximal lines.
NodeSet chung_yao(const std::vector<LinearForm>& lines);

// Intersections of n+1 general-position lines plus one free node per line:
// the GC_n family with exactly n+1 maximal lines. Free points must lie on
// their lines and avoid all intersection points; for degree 1 the three
// nodes must be noncollinear. Correctness is re-verified after assembly.
NodeSet carnicer_gasca(const std::vector<LinearForm>& lines, const std::vector<Point>& free_points);

// {(i,j) : i,j >= 0, i+j <= n}
NodeSet principal_lattice(int n);

// A Carnicer-Gasca set of degree n >= 2 with a distinguished node B on l_0
// such that the n lines joining B to the other free nodes are 2-node lines
// (each used by the node l_0 cap l_i). Deterministic in the seed.
std::pair<NodeSet, Point> cg_with_prescribed_2node_lines(int n, std::uint64_t seed);

// Deterministic pseudo-random small-integer lines, resampled until the
// arrangement is in general position; identical seeds give identical output.
LineArrangement random_general_position_lines(int m, std::uint64_t seed);

// The deterministic parameter sweep 1, 1/2, 2, 1/3, 3, ... used to place
// free points on a line while escaping finitely many forbidden positions.
Rat sweep_parameter(int index);

// One swept free point per line, avoiding every intersection point and a
// collinear free-point configuration: ready input for carnicer_gasca.
std::vector<Point> swept_free_points(const std::vector<LinearForm>& lines);

}  // namespace gcset
