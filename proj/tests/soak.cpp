// Full-suite soak: every checker over every canonical family at desk scale.
// Expects only pass/vacuous statuses and prints a status histogram.

#include "gcset/generators.hpp"
#include "gcset/harness.hpp"
#include "gcset/io.hpp"

#include <cstdio>
#include <map>
#include <string>

int main() {
    using namespace gcset;

    std::vector<SuiteTarget> targets;
    for (int n = 1; n <= 5; ++n)
        targets.push_back({"chung-yao(" + std::to_string(n) + ")",
                           chung_yao(random_general_position_lines(n + 2, 100 + n).lines),
                           std::nullopt});
    for (int n = 2; n <= 5; ++n) {
        auto arr = random_general_position_lines(n + 1, 200 + n);
        targets.push_back({"carnicer-gasca(" + std::to_string(n) + ")",
                           carnicer_gasca(arr.lines, swept_free_points(arr.lines)), std::nullopt});
    }
    for (int n = 2; n <= 6; ++n)
        targets.push_back({"principal(" + std::to_string(n) + ")", principal_lattice(n), std::nullopt});
    for (int n = 2; n <= 4; ++n)
        for (int s = 1; s <= 3; ++s) {
            auto [x, b] = cg_with_prescribed_2node_lines(n, s);
            targets.push_back({"prescribed(" + std::to_string(n) + "," + std::to_string(s) + ")",
                               std::move(x), b});
        }

    auto reports = run_suite(targets, {"all"}, 1);

    std::map<std::string, size_t> by_status;
    size_t fails = 0;
    for (const auto& r : reports) {
        ++by_status[to_string(r.status)];
        if (r.status == CheckStatus::fail) {
            ++fails;
            std::printf("FAIL %s %s :: %s\n", r.claim_id.c_str(), r.subject.c_str(),
                        r.details.c_str());
        }
    }
    std::printf("%zu targets, %zu claim checks:", targets.size(), reports.size());
    for (const auto& [status, count] : by_status) std::printf(" %s=%zu", status.c_str(), count);
    std::printf("\n");
    return fails == 0 ? 0 : 1;
}
