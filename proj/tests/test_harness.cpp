#include "gcset/harness.hpp"

#include "gcset/generators.hpp"
#include "gcset/io.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace gcset;

namespace {

Point pt(long x, long y) { return Point{Rat(x), Rat(y)}; }

bool no_fail(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.status == CheckStatus::fail) return false;
    return true;
}

size_t count_status(const std::vector<VerificationReport>& reports, const std::string& id,
                    CheckStatus st) {
    size_t n = 0;
    for (const auto& r : reports)
        if (r.claim_id == id && r.status == st) ++n;
    return n;
}

}  // namespace

TEST_CASE("analyze_set summarizes a set once") {
    SetAnalysis sa = analyze_set(principal_lattice(2), Exec::serial, true);
    CHECK(sa.correct);
    CHECK(sa.gc);
    CHECK(sa.cls == SetClass::CarnicerGasca);
    CHECK(sa.maximal.size() == 3);
    CHECK(sa.fundamentals.size() == 6);
    REQUIRE(sa.triplets.has_value());
    CHECK(!sa.triplets->empty());

    SetAnalysis bad = analyze_set(NodeSet(1, {pt(0, 0), pt(1, 1), pt(2, 2)}), Exec::serial);
    CHECK(!bad.correct);
    CHECK(bad.cls == SetClass::NotCorrect);
}

TEST_CASE("single-triplet characterization on the degree-2 lattice") {
    NodeSet x = principal_lattice(2);
    Point b = pt(0, 0);
    CurveWitness mu = curve_witness(x, fundamental_polynomial(x, b), 2);

    auto reports = verify_special_triplet_characterization(x, mu, pt(1, 0), b, pt(0, 1), "lat2");
    CHECK(reports.size() == 8);  // equiv + i..vii
    for (const auto& r : reports) {
        CAPTURE(r.claim_id);
        CAPTURE(r.details);
        CHECK(r.status == CheckStatus::pass);
    }
}

TEST_CASE("characterization detects the nonspecial triplet consistently") {
    NodeSet x = principal_lattice(5);
    // mu = the quartic through 18 lattice nodes; A = (2,1) on mu, B = (1,2) off mu
    BivariatePoly f = multiply(
        multiply(BivariatePoly::from_linear(LinearForm{Rat(1), Rat(0), Rat(0)}),
                 BivariatePoly::from_linear(LinearForm{Rat(0), Rat(1), Rat(0)})),
        multiply(BivariatePoly::from_linear(LinearForm{Rat(0), Rat(1), Rat(-1)}),
                 BivariatePoly::from_linear(LinearForm{Rat(1), Rat(1), Rat(-5)})));
    CurveWitness mu = curve_witness(x, f, 4);
    auto reports = verify_special_triplet_characterization(x, mu, pt(2, 1), pt(1, 2), pt(2, 2), "nonspecial");
    REQUIRE(count_status(reports, "Thm2.1.equiv", CheckStatus::pass) == 1);
    // not special, so the implication statements are vacuous
    CHECK(count_status(reports, "Thm2.1.iii", CheckStatus::vacuous) == 1);
    CHECK(no_fail(reports));
}

TEST_CASE("characterization is vacuous off the hypotheses") {
    NodeSet x = principal_lattice(5);
    BivariatePoly f = fundamental_polynomial(x, pt(0, 0));
    CurveWitness mu = curve_witness(x, f, 5);
    // A off the curve: every report vacuous
    auto reports = verify_special_triplet_characterization(x, mu, pt(0, 0), pt(1, 1), pt(2, 2), "roles");
    for (const auto& r : reports) CHECK(r.status == CheckStatus::vacuous);
}

TEST_CASE("multi-triplet decomposition on a prescribed construction") {
    auto [x, b] = cg_with_prescribed_2node_lines(3, 1);
    SetAnalysis sa = analyze_set(x, Exec::serial);
    size_t bi = *x.index_of(b);
    CurveWitness mu = curve_witness(x, sa.fundamentals[bi], 3);

    std::vector<SpecialTriplet> triplets;
    for (const auto& u : used_two_node_lines_through(x, b, sa.fundamentals, sa.census)) {
        SpecialTriplet t = orient_common(
            triplet_from_used_2node_line(x, UsageRecord{u.c, u.line, u.quotient}), b);
        bool seen = false;
        for (const auto& s : triplets)
            if (s.same_nodes(t)) seen = true;
        if (!seen) triplets.push_back(t);
    }
    REQUIRE(triplets.size() == 3);

    auto reports = verify_multi_triplet_decomposition(x, mu, b, triplets, "prescribed(3,1)");
    CHECK(reports.size() == 6);
    for (const auto& r : reports) {
        CAPTURE(r.claim_id);
        CAPTURE(r.details);
        CHECK(r.status == CheckStatus::pass);
    }

    // duplicated triplets are rejected with an explanation, not a crash
    auto dup = verify_multi_triplet_decomposition(x, mu, b, {triplets[0], triplets[0]}, "dup");
    REQUIRE(dup.size() == 1);
    CHECK(dup[0].status == CheckStatus::vacuous);
    CHECK(dup[0].details.find("vertex pair") != std::string::npos);
}

TEST_CASE("m = 1 decomposition degenerates to the single-triplet statements") {
    NodeSet x = principal_lattice(2);
    Point b = pt(0, 0);
    CurveWitness mu = curve_witness(x, fundamental_polynomial(x, b), 2);
    auto t = detect_special_triplet(x, pt(1, 0), b, pt(0, 1));
    REQUIRE(t.has_value());
    auto reports = verify_multi_triplet_decomposition(x, mu, b, {*t}, "lat2 m=1");
    CHECK(reports.size() == 6);
    for (const auto& r : reports) CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("collinearity checks") {
    SUBCASE("two prescribed lines") {
        auto [x, b] = cg_with_prescribed_2node_lines(2, 1);
        auto reports = verify_collinearity(x, b, "prescribed(2,1)");
        CHECK(no_fail(reports));
        CHECK(count_status(reports, "Thm3.1.collinear", CheckStatus::pass) == 1);
        CHECK(count_status(reports, "Thm3.1.gc", CheckStatus::pass) == 1);
        CHECK(count_status(reports, "Thm3.1.maxline", CheckStatus::pass) == 1);
        CHECK(count_status(reports, "Prop3.3", CheckStatus::pass) == 1);
        CHECK(count_status(reports, "Cor3.2.iv", CheckStatus::pass) == 1);
    }
    SUBCASE("four prescribed lines") {
        auto [x, b] = cg_with_prescribed_2node_lines(4, 2);
        auto reports = verify_collinearity(x, b, "prescribed(4,2)");
        CHECK(no_fail(reports));
        CHECK(count_status(reports, "Thm3.1.collinear", CheckStatus::pass) == 1);
    }
    SUBCASE("Chung-Yao sets are vacuous") {
        NodeSet cy = chung_yao(random_general_position_lines(5, 41).lines);
        auto reports = verify_collinearity(cy, cy.node(0), "cy3");
        for (const auto& r : reports) CHECK(r.status == CheckStatus::vacuous);
    }
}

TEST_CASE("usage bound checks") {
    SUBCASE("prescribed construction sits at the bound") {
        auto [x, b] = cg_with_prescribed_2node_lines(3, 1);
        auto reports = verify_usage_bound(x, b, "prescribed(3,1)");
        CHECK(count_status(reports, "Cor3.4.i", CheckStatus::pass) == 1);
        CHECK(count_status(reports, "Cor3.4.ii", CheckStatus::pass) == 1);
        for (const auto& r : reports)
            if (r.claim_id == "Cor3.4.ii") CHECK(r.details.find("CarnicerGasca") != std::string::npos);
    }
    SUBCASE("lattice corner") {
        auto reports = verify_usage_bound(principal_lattice(2), pt(0, 0), "lat2");
        CHECK(no_fail(reports));
        CHECK(count_status(reports, "Cor3.4.i", CheckStatus::pass) == 1);
    }
    SUBCASE("Chung-Yao sits at the triplet bound without any used 2-node line") {
        // each node of a degree-3 Chung-Yao set lies in exactly three special
        // triplets: the complements of the products of two maximal lines
        // avoiding it; none arises from a 2-node line
        NodeSet cy = chung_yao(random_general_position_lines(5, 43).lines);
        auto reports = verify_usage_bound(cy, cy.node(2), "cy3");
        CHECK(no_fail(reports));
        for (const auto& r : reports) {
            if (r.claim_id == "Cor3.4.i")
                CHECK(r.details.find("3 special triplets") != std::string::npos);
            if (r.claim_id == "Cor3.4.ii")
                CHECK(r.details.find("0 used 2-node lines") != std::string::npos);
        }
        CHECK(used_two_node_lines_through(cy, cy.node(2)).empty());
    }
}

TEST_CASE("two used 2-node lines can share one special triplet") {
    // seven nodes on the conic y*(y-1) plus the noncollinear triplet
    // {(0,2), (1,3), (2,2)}: the third vertex of each used 2-node line
    // through B = (1,3) is the other line's base node, so both usages
    // collapse to the single triplet {(0,2), (1,3), (2,2)}
    std::vector<Point> nodes{pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0), pt(0, 1),
                             pt(1, 1), pt(2, 1), pt(0, 2), pt(1, 3), pt(2, 2)};
    NodeSet x(3, nodes);
    REQUIRE(is_n_correct(x));
    Point b = pt(1, 3);

    auto usages = used_two_node_lines_through(x, b);
    REQUIRE(usages.size() == 2);
    CHECK(((usages[0].c == pt(0, 2) && usages[1].c == pt(2, 2)) ||
           (usages[0].c == pt(2, 2) && usages[1].c == pt(0, 2))));
    // each line's base node is the other line's using node
    CHECK(usages[0].a == usages[1].c);
    CHECK(usages[1].a == usages[0].c);

    auto t0 = triplet_from_used_2node_line(x, UsageRecord{usages[0].c, usages[0].line, usages[0].quotient});
    auto t1 = triplet_from_used_2node_line(x, UsageRecord{usages[1].c, usages[1].line, usages[1].quotient});
    CHECK(t0.same_nodes(t1));
    CHECK(proportional(t0.f, t1.f));

    auto reports = verify_collinearity(x, b, "coincident");
    CHECK(no_fail(reports));
    CHECK(count_status(reports, "Cor3.2.pattern", CheckStatus::pass) == 1);
    // one distinct triplet only, so the multi-triplet theorem is vacuous
    CHECK(count_status(reports, "Thm3.1.collinear", CheckStatus::vacuous) == 1);
}

TEST_CASE("gc6 corollary is vacuous on the known families") {
    auto r1 = verify_gc6_corollary(principal_lattice(6), "lat6");
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].status == CheckStatus::vacuous);
    CHECK(r1[0].details.find("maximal line") != std::string::npos);

    NodeSet cy = chung_yao(random_general_position_lines(8, 47).lines);
    auto r2 = verify_gc6_corollary(cy, "cy6");
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].status == CheckStatus::vacuous);

    auto r3 = verify_gc6_corollary(principal_lattice(3), "lat3");
    CHECK(r3[0].status == CheckStatus::vacuous);
}

TEST_CASE("run_suite aggregates deterministically") {
    std::vector<SuiteTarget> targets;
    targets.push_back(SuiteTarget{"principal(2)", principal_lattice(2), std::nullopt});
    auto [cg, b] = cg_with_prescribed_2node_lines(2, 1);
    targets.push_back(SuiteTarget{"prescribed(2,1)", cg, b});

    auto reports = run_suite(targets, {"all"}, 7);
    CHECK(!reports.empty());
    CHECK(no_fail(reports));
    for (size_t i = 1; i < reports.size(); ++i) {
        bool ordered = reports[i - 1].claim_id < reports[i].claim_id ||
                       (reports[i - 1].claim_id == reports[i].claim_id &&
                        reports[i - 1].subject <= reports[i].subject);
        CHECK(ordered);
    }

    auto again = run_suite(targets, {"all"}, 7);
    CHECK(serialize_report(reports) == serialize_report(again));

    CHECK(run_suite({}, {"all"}, 1).empty());
    CHECK_THROWS(run_suite(targets, {"bogus"}, 1));
}

TEST_CASE("a claimed triplet that is not special produces a fail with a witness") {
    NodeSet x = principal_lattice(2);
    Point b = pt(0, 0);
    CurveWitness mu = curve_witness(x, fundamental_polynomial(x, b), 2);
    // the line through (1,0) and (1,1) is not a component of p*_B
    SpecialTriplet bogus{pt(1, 0), b, pt(1, 1), BivariatePoly::constant(1, Rat(1))};
    auto reports = verify_multi_triplet_decomposition(x, mu, b, {bogus}, "bogus");
    size_t fails = 0;
    for (const auto& r : reports) {
        if (r.status != CheckStatus::fail) continue;
        ++fails;
        CHECK(r.claim_id == "Thm2.2.i");
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->find("\"degree\":2") != std::string::npos);
        CHECK(r.witness->find("offending:") != std::string::npos);
    }
    CHECK(fails == 1);

    // and the serialized form carries the indented witness block
    std::string text = serialize_report(reports);
    CHECK(text.find("CLAIM Thm2.2.i fail") != std::string::npos);
    CHECK(text.find("    set: {") != std::string::npos);
}

TEST_CASE("a corrupted set degrades to vacuous checks, not failures") {
    // move one node of the degree-3 lattice off its maximal line
    std::vector<Point> nodes = principal_lattice(3).nodes();
    for (Point& p : nodes)
        if (p == pt(0, 2)) p = Point{rat(1, 7), Rat(2)};
    NodeSet corrupted(3, nodes);

    auto reports = run_suite({SuiteTarget{"corrupted", corrupted, std::nullopt}}, {"all"}, 1);
    CHECK(no_fail(reports));
}
