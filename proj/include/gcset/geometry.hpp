#pragma once

#include "gcset/rational.hpp"

#include <optional>
#include <string>

namespace gcset {

struct Point {
    Rat x;
    Rat y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// total order (x, then y), used wherever a canonical point order is needed
bool operator<(const Point& l, const Point& r);

std::string to_string(const Point& p);

// The line a*x + b*y + c = 0 with (a,b) != (0,0), scaled so that the first
// nonzero coefficient in the order (a,b,c) equals 1. The normalized triple
// is the deduplication key for line censuses.
class LinearForm {
public:
    LinearForm(const Rat& a, const Rat& b, const Rat& c);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& c() const { return c_; }

    Rat eval(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
    bool contains(const Point& p) const { return sign(eval(p)) == 0; }

    // Canonical parametrization, fixed so restrictions are reproducible:
    // if b != 0: P0 = (0, -c/b), D = (1, -a/b); else P0 = (-c/a, 0), D = (0, 1).
    Point param_origin() const;
    Point param_direction() const;
    Point at(const Rat& t) const;

    bool operator==(const LinearForm& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }

private:
    Rat a_, b_, c_;
};

// lexicographic on the normalized (a, b, c)
bool operator<(const LinearForm& l, const LinearForm& r);

// Line through two distinct points; throws std::invalid_argument("identical points").
LinearForm line_through(const Point& A, const Point& B);

bool parallel(const LinearForm& l, const LinearForm& r);

// Intersection point, or nullopt for parallel lines.
std::optional<Point> intersect(const LinearForm& l, const LinearForm& r);

// "x - y + 1/2 = 0" style rendering for reports and tables.
std::string to_string(const LinearForm& l);

}  // namespace gcset
