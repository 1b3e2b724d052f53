#pragma once

#include "gcset/poly.hpp"
#include "gcset/rational.hpp"

#include <cstdint>

namespace gcset::testing {

// deterministic small-value generator for property-style tests
struct TestRng {
    std::uint64_t state;

    explicit TestRng(std::uint64_t seed) : state(seed ? seed : 1) {}

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }

    long integer(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rational(long max_abs = 9, long max_den = 4) {
        return rat(integer(-max_abs, max_abs), integer(1, max_den));
    }

    Rat nonzero_rational(long max_abs = 9, long max_den = 4) {
        Rat r = rational(max_abs, max_den);
        while (sign(r) == 0) r = rational(max_abs, max_den);
        return r;
    }

    BivariatePoly poly(int degree_bound) {
        BivariatePoly p(degree_bound);
        for (int d = 0; d <= degree_bound; ++d)
            for (int j = 0; j <= d; ++j) p.set_coeff(d - j, j, rational(5, 3));
        return p;
    }
};

}  // namespace gcset::testing
