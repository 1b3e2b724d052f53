#pragma once

#include "gcset/geometry.hpp"
#include "gcset/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcset {

// dim of the space of bivariate polynomials of total degree <= n
inline long pi_dim(int n) { return n < 0 ? 0 : static_cast<long>(n + 1) * (n + 2) / 2; }

// Position of x^i y^j in the graded-lex basis (1; x, y; x^2, xy, y^2; ...).
inline size_t monomial_index(int i, int j) {
    int d = i + j;
    return static_cast<size_t>(d) * (d + 1) / 2 + static_cast<size_t>(j);
}

// Dense polynomial in Pi_n, coefficients in graded-lex order. The stored
// degree bound may exceed the effective degree; trailing blocks are zero.
class BivariatePoly {
public:
    BivariatePoly() : degree_bound_(0), coeffs_(1) {}  // the zero polynomial
    explicit BivariatePoly(int degree_bound);
    BivariatePoly(int degree_bound, std::vector<Rat> coeffs);

    static BivariatePoly constant(int degree_bound, const Rat& value);
    static BivariatePoly from_linear(const LinearForm& line);

    int degree_bound() const { return degree_bound_; }
    // effective total degree; -1 for the zero polynomial
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    const Rat& coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rat& value);
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat operator()(const Point& p) const;

    // Same polynomial under a new bound; shrinking below the effective degree throws.
    BivariatePoly with_degree_bound(int m) const;
    // Scaled so the first nonzero graded-lex coefficient equals 1 (zero unchanged).
    BivariatePoly normalized() const;

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const Rat& s) const;

    bool operator==(const BivariatePoly& o) const;

private:
    int degree_bound_;
    std::vector<Rat> coeffs_;
};

// Product with degree_bound = sum of the factors' bounds.
BivariatePoly multiply(const BivariatePoly& p, const BivariatePoly& q);

// Exact quotient p / line if the line divides p, nullopt otherwise.
// Decided by an affine change of variables sending the line to a coordinate,
// coefficient inspection, and back-substitution. Throws on the zero polynomial.
std::optional<BivariatePoly> divide_by_linear(const BivariatePoly& p, const LinearForm& line);

// Coefficients of t -> p(P0 + t*D) on the line's canonical parametrization;
// length degree_bound + 1.
std::vector<Rat> restrict_to_line(const BivariatePoly& p, const LinearForm& line);

// p = s*q for some nonzero scalar s (two zero polynomials are proportional).
bool proportional(const BivariatePoly& p, const BivariatePoly& q);

std::string to_string(const BivariatePoly& p);

}  // namespace gcset
