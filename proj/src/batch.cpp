#include "gcset/batch.hpp"

#include <array>
#include <stdexcept>

namespace gcset {

namespace {

// One loop body, two schedules. Results land in preallocated slots keyed by
// the loop index, so the parallel run is deterministic by construction.
template <typename Body>
void run_indexed(size_t count, Exec exec, const Body& body) {
    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(count); ++i) body(static_cast<size_t>(i));
        return;
#endif
    }
    for (size_t i = 0; i < count; ++i) body(i);
}

}  // namespace

std::vector<BivariatePoly> all_fundamentals(const NodeSet& x, Exec exec) {
    if (!is_n_correct(x)) throw std::invalid_argument("not n-correct");
    const RationalMatrix v = vandermonde(x);
    std::vector<BivariatePoly> out(x.size());
    run_indexed(x.size(), exec, [&](size_t i) {
        std::vector<Rat> values(x.size(), Rat(0));
        values[i] = 1;
        Elimination e = eliminate(v, values);
        out[i] = BivariatePoly(x.degree(), *e.solution);
    });
    return out;
}

std::vector<SpecialTriplet> scan_special_triplets(const NodeSet& x, Exec exec) {
    if (x.degree() < 2) throw std::invalid_argument("degree must be at least 2");
    if (!is_n_correct(x)) throw std::invalid_argument("not n-correct");

    const RationalMatrix rows = monomial_rows(x, x.degree() - 1);
    const size_t n = x.size();
    std::vector<std::array<size_t, 3>> triples;
    triples.reserve(n * (n - 1) * (n - 2) / 6);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});

    std::vector<std::optional<SpecialTriplet>> found(triples.size());
    run_indexed(triples.size(), exec, [&](size_t t) {
        const auto& [i, j, k] = triples[t];
        found[t] = detect_special_triplet(x, rows, x.node(i), x.node(j), x.node(k));
    });

    std::vector<SpecialTriplet> out;
    for (auto& f : found)
        if (f) out.push_back(std::move(*f));
    return out;
}

std::vector<std::vector<size_t>> usage_table(const NodeSet& x,
                                             const std::vector<LineCensusEntry>& census,
                                             const std::vector<BivariatePoly>& fundamentals,
                                             Exec exec) {
    if (fundamentals.size() != x.size())
        throw std::invalid_argument("one fundamental polynomial per node required");
    std::vector<std::vector<size_t>> out(census.size());
    run_indexed(census.size(), exec, [&](size_t l) {
        for (size_t i = 0; i < x.size(); ++i)
            if (usage_from(fundamentals[i], x.node(i), census[l].line)) out[l].push_back(i);
    });
    return out;
}

}  // namespace gcset
