#include "monoconv/lp.hpp"

#include <doctest.h>

#include <random>

using namespace monoconv;

TEST_SUITE("lp") {

TEST_CASE("textbook maximum") {
    // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
    LinearProgram lp;
    lp.c = {3.0, 5.0};
    lp.add_row({1.0, 0.0}, RowSense::le, 4.0);
    lp.add_row({0.0, 2.0}, RowSense::le, 12.0);
    lp.add_row({3.0, 2.0}, RowSense::le, 18.0);
    const LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(36.0));
    CHECK(r.x[0] == doctest::Approx(2.0));
    CHECK(r.x[1] == doctest::Approx(6.0));
}

TEST_CASE("minimum with ge and eq rows") {
    // min x + y, x + 2y >= 4, x - y = 1 -> x = 2, y = 1
    LinearProgram lp;
    lp.maximize = false;
    lp.c = {1.0, 1.0};
    lp.add_row({1.0, 2.0}, RowSense::ge, 4.0);
    lp.add_row({1.0, -1.0}, RowSense::eq, 1.0);
    const LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(3.0));
    CHECK(r.x[0] == doctest::Approx(2.0));
}

TEST_CASE("negative right-hand sides are normalised") {
    // -x <= -2 means x >= 2; min x -> 2
    LinearProgram lp;
    lp.maximize = false;
    lp.c = {1.0};
    lp.add_row({-1.0}, RowSense::le, -2.0);
    const LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(2.0));
}

TEST_CASE("infeasible and unbounded") {
    LinearProgram inf;
    inf.c = {1.0};
    inf.add_row({1.0}, RowSense::le, 1.0);
    inf.add_row({1.0}, RowSense::ge, 2.0);
    CHECK(solve_lp(inf).status == LpStatus::infeasible);

    LinearProgram unb;
    unb.c = {1.0, 0.0};
    unb.add_row({-1.0, 1.0}, RowSense::le, 1.0);
    CHECK(solve_lp(unb).status == LpStatus::unbounded);
}

TEST_CASE("degenerate redundant equalities") {
    LinearProgram lp;
    lp.c = {1.0, 1.0, 1.0};
    lp.add_row({1.0, 1.0, 1.0}, RowSense::eq, 1.0);
    lp.add_row({2.0, 2.0, 2.0}, RowSense::eq, 2.0);
    lp.add_row({1.0, 0.0, 0.0}, RowSense::le, 0.0);
    const LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("random box programs match the coordinatewise optimum") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        LinearProgram lp;
        const int n = 1 + k % 6;
        double expect = 0.0;
        for (int j = 0; j < n; ++j) {
            lp.c.push_back(u(rng));
            Point row(static_cast<std::size_t>(n), 0.0);
            row[static_cast<std::size_t>(j)] = 1.0;
            const double ub = 1.0 + u(rng) * 0.5;
            lp.add_row(row, RowSense::le, ub);
            expect += std::max(0.0, lp.c.back()) * ub;
        }
        const LpResult r = solve_lp(lp);
        REQUIRE(r.status == LpStatus::optimal);
        CHECK(r.value == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("malformed programs are rejected") {
    LinearProgram lp;
    lp.c = {1.0, 1.0};
    lp.add_row({1.0}, RowSense::le, 1.0);
    CHECK_THROWS_AS(solve_lp(lp), InvalidArgument);
}

}
