// Benchmark the OpenMP kernels against the serial reference implementation.
// Each kernel runs both ways on the same inputs; the outputs are compared
// for exact equality before any timing is reported.

#include "gcset/batch.hpp"
#include "gcset/generators.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace gcset;
using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& body) {
    auto t0 = Clock::now();
    body();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* kernel, const std::string& size, double serial_ms, double parallel_ms,
         bool match) {
    std::printf("%-22s %-14s %10.1f ms %10.1f ms %7.2fx  %s\n", kernel, size.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms, match ? "match" : "MISMATCH");
}

int bench_fundamentals(const NodeSet& x, const std::string& label) {
    std::vector<BivariatePoly> serial, parallel;
    double ts = time_ms([&] { serial = all_fundamentals(x, Exec::serial); });
    double tp = time_ms([&] { parallel = all_fundamentals(x, Exec::parallel); });
    bool match = serial.size() == parallel.size();
    for (size_t i = 0; match && i < serial.size(); ++i) match = serial[i] == parallel[i];
    row("all_fundamentals", label, ts, tp, match);
    return match ? 0 : 1;
}

int bench_triplets(const NodeSet& x, const std::string& label) {
    std::vector<SpecialTriplet> serial, parallel;
    double ts = time_ms([&] { serial = scan_special_triplets(x, Exec::serial); });
    double tp = time_ms([&] { parallel = scan_special_triplets(x, Exec::parallel); });
    bool match = serial.size() == parallel.size();
    for (size_t i = 0; match && i < serial.size(); ++i)
        match = serial[i].same_nodes(parallel[i]) && serial[i].f == parallel[i].f;
    row("scan_special_triplets", label, ts, tp, match);
    return match ? 0 : 1;
}

int bench_usage(const NodeSet& x, const std::string& label) {
    auto funds = all_fundamentals(x, Exec::parallel);
    auto census = line_census(x);
    std::vector<std::vector<size_t>> serial, parallel;
    double ts = time_ms([&] { serial = usage_table(x, census, funds, Exec::serial); });
    double tp = time_ms([&] { parallel = usage_table(x, census, funds, Exec::parallel); });
    bool match = serial == parallel;
    row("usage_table", label, ts, tp, match);
    return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time (parallel == serial)\n");
#endif
    std::printf("%-22s %-14s %13s %13s %8s  %s\n", "kernel", "input", "serial", "parallel",
                "speedup", "check");

    int bad = 0;
    if (quick) {
        bad += bench_fundamentals(principal_lattice(5), "lattice(5)");
        bad += bench_triplets(principal_lattice(4), "lattice(4)");
        bad += bench_usage(chung_yao(random_general_position_lines(6, 7).lines), "chung-yao(4)");
    } else {
        bad += bench_fundamentals(principal_lattice(6), "lattice(6)");
        bad += bench_fundamentals(principal_lattice(7), "lattice(7)");
        bad += bench_fundamentals(principal_lattice(8), "lattice(8)");
        bad += bench_triplets(principal_lattice(4), "lattice(4)");
        bad += bench_triplets(principal_lattice(5), "lattice(5)");
        bad += bench_triplets(principal_lattice(6), "lattice(6)");
        bad += bench_usage(chung_yao(random_general_position_lines(7, 7).lines), "chung-yao(5)");
        bad += bench_usage(principal_lattice(6), "lattice(6)");
    }
    return bad == 0 ? 0 : 1;
}
