#include "gcset/nodeset.hpp"

#include "gcset/generators.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace gcset;

namespace {

Point pt(long x, long y) { return Point{Rat(x), Rat(y)}; }

NodeSet unit_triangle() { return NodeSet(1, {pt(0, 0), pt(1, 0), pt(0, 1)}); }

}  // namespace

TEST_CASE("node sets reject duplicates and emptiness") {
    CHECK_THROWS_WITH(NodeSet(1, {pt(0, 0), pt(0, 0), pt(1, 0)}), "duplicate node");
    CHECK_THROWS(NodeSet(1, {}));
}

TEST_CASE("vandermonde of the unit triangle") {
    RationalMatrix m = vandermonde(unit_triangle());
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 3);
    long expect[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(m.at(r, c) == expect[r][c]);
}

TEST_CASE("correctness and independence decisions") {
    CHECK(is_n_correct(unit_triangle()));
    CHECK(!is_n_correct(NodeSet(1, {pt(0, 0), pt(1, 1), pt(2, 2)})));
    CHECK(is_n_correct(principal_lattice(2)));
    CHECK(is_n_correct(principal_lattice(5)));

    // more than d(5,4) = 18 points of the quartic x*y*(y-1)*(x+y-5) are
    // 5-dependent: its 18 lattice nodes plus one more point of the curve
    BivariatePoly f = multiply(
        multiply(BivariatePoly::from_linear(LinearForm{Rat(1), Rat(0), Rat(0)}),
                 BivariatePoly::from_linear(LinearForm{Rat(0), Rat(1), Rat(0)})),
        multiply(BivariatePoly::from_linear(LinearForm{Rat(0), Rat(1), Rat(-1)}),
                 BivariatePoly::from_linear(LinearForm{Rat(1), Rat(1), Rat(-5)})));
    std::vector<Point> on_curve = nodes_on_curve(principal_lattice(5), f);
    REQUIRE(on_curve.size() == 18);
    on_curve.push_back(pt(6, -1));  // on x + y = 5
    REQUIRE(sign(f(on_curve.back())) == 0);
    CHECK(!is_n_independent(NodeSet(5, on_curve)));

    // any subset of a correct set is independent
    NodeSet lattice = principal_lattice(4);
    testing::TestRng rng(41);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Point> subset;
        for (const Point& p : lattice.nodes())
            if (rng.integer(0, 1)) subset.push_back(p);
        if (subset.empty()) continue;
        CHECK(is_n_independent(NodeSet(4, subset)));
    }
}

TEST_CASE("interpolation") {
    NodeSet tri = unit_triangle();
    BivariatePoly p = interpolate(tri, {Rat(1), Rat(0), Rat(0)});
    CHECK(p.coeff(0, 0) == 1);
    CHECK(p.coeff(1, 0) == -1);
    CHECK(p.coeff(0, 1) == -1);

    BivariatePoly z = interpolate(tri, {Rat(0), Rat(0), Rat(0)});
    CHECK(z.is_zero());

    // members of Pi_n reproduce exactly
    NodeSet lattice = principal_lattice(2);
    testing::TestRng rng(43);
    for (int iter = 0; iter < 20; ++iter) {
        BivariatePoly q = rng.poly(2);
        std::vector<Rat> values;
        for (const Point& node : lattice.nodes()) values.push_back(q(node));
        CHECK(interpolate(lattice, values) == q);
    }

    CHECK_THROWS_WITH(interpolate(NodeSet(1, {pt(0, 0), pt(1, 1), pt(2, 2)}), {Rat(0), Rat(0), Rat(0)}),
                      "not n-correct");
}

TEST_CASE("fundamental polynomials") {
    NodeSet tri = unit_triangle();
    BivariatePoly p = fundamental_polynomial(tri, pt(0, 0));
    CHECK(p.coeff(0, 0) == 1);
    CHECK(p.coeff(1, 0) == -1);
    CHECK(p.coeff(0, 1) == -1);

    // lattice(2), A = (1,1): x*y kills the other five nodes and is 1 at A
    BivariatePoly q = fundamental_polynomial(principal_lattice(2), pt(1, 1));
    CHECK(q.coeff(1, 1) == 1);
    CHECK(q.degree() == 2);
    for (int d = 0; d <= 2; ++d)
        for (int j = 0; j <= d; ++j)
            if (!(d == 2 && j == 1)) CHECK(sign(q.coeff(d - j, j)) == 0);

    CHECK_THROWS_WITH(fundamental_polynomial(tri, pt(5, 5)), "node not in set");
}

TEST_CASE("duality and the Lagrange partition of unity") {
    NodeSet lattice = principal_lattice(3);
    std::vector<BivariatePoly> funds;
    for (const Point& a : lattice.nodes()) funds.push_back(fundamental_polynomial(lattice, a));

    for (size_t i = 0; i < lattice.size(); ++i)
        for (size_t j = 0; j < lattice.size(); ++j)
            CHECK(funds[i](lattice.node(j)) == (i == j ? 1 : 0));

    BivariatePoly sum(3);
    for (const auto& f : funds) sum = sum + f;
    CHECK(sum == BivariatePoly::constant(3, Rat(1)));
}
