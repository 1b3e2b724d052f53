#pragma once

#include "gcset/rational.hpp"

#include <optional>
#include <vector>

namespace gcset {

class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    Rat& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<Rat> entries_;
};

struct Elimination {
    int rank = 0;
    // defined for square inputs only
    std::optional<Rat> determinant;
    // reduced-echelon convention: one vector per free column, ordered by
    // ascending free column, unit entry in its own free column
    std::vector<std::vector<Rat>> nullspace;
    // present when a right-hand side was supplied (free variables set to 0)
    std::optional<std::vector<Rat>> solution;
};

// Fraction-free (Bareiss) elimination over a denominator-cleared integer
// matrix, with deterministic first-nonzero pivoting; identical inputs give
// bit-identical outputs. Throws std::domain_error("inconsistent system")
// when rhs is supplied and the system has no solution.
Elimination eliminate(const RationalMatrix& m);
Elimination eliminate(const RationalMatrix& m, const std::vector<Rat>& rhs);

}  // namespace gcset
