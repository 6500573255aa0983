#include "monoconv/bounds.hpp"
#include "monoconv/polyrelax.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace monoconv;

TEST_SUITE("polyrelax") {

TEST_CASE("polynomial text parsing") {
    const Polynomial p = Polynomial::parse_text(
        "# two terms\n"
        "1 1 1 0\n"
        "\n"
        "-2 1 0 1\n"
        "0.5 1 1 0\n"
        "3 0 0 0\n"
        "0 1 1 1\n");
    CHECK(p.dim() == 3);
    CHECK(p.terms().size() == 3);
    CHECK(p.degree() == 2);
    CHECK(p.is_multilinear());
    CHECK(p(Point{1.0, 1.0, 1.0}) == doctest::Approx(1.5 - 2.0 + 3.0));
    CHECK(p.scaled(2.0)(Point{1.0, 1.0, 1.0}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(Polynomial::parse_text("# nothing\n"), InvalidArgument);
    CHECK_THROWS_AS(Polynomial::parse_text("1 1 1\n2 1\n"), InvalidArgument);
    CHECK_THROWS_AS(Polynomial::parse_text("1 1 x\n"), InvalidArgument);
    CHECK_THROWS_AS(Polynomial::parse_text("1 -1 1\n"), InvalidArgument);
    CHECK_THROWS_AS(p(Point{1.0}), InvalidArgument);
}

TEST_CASE("polynomial JSON parsing") {
    const Polynomial p = Polynomial::parse_json(
        R"({"n": 2, "terms": [{"coeff": 1.5, "exponents": [2, 1]}, {"coeff": -1, "exponents": [0, 1]}]})");
    CHECK(p.dim() == 2);
    CHECK(p.degree() == 3);
    CHECK_FALSE(p.is_multilinear());
    CHECK(p(Point{2.0, 1.0}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(Polynomial::parse_json("{"), InvalidArgument);
    CHECK_THROWS_AS(Polynomial::parse_json(R"({"n": 2, "terms": [{"coeff": 1, "exponents": [1]}]})"), InvalidArgument);
}

TEST_CASE("gap constants by hand") {
    const Polynomial p(3, {{1.0, {1, 1, 0}}, {-2.0, {1, 0, 1}}, {5.0, {1, 0, 0}}});
    // positive x1x2 weighs C2(2) = 1/4, negative -2 x1x3 weighs 2 C1(2) = 1/2
    CHECK(lprime(p) == doctest::Approx(0.5));
    const GapBound g = gap_bound(p);
    CHECK(g.log_binomial == doctest::Approx(std::log(10.0)));
    CHECK(g.tight == doctest::Approx(5.0));
    CHECK(g.cheap == doctest::Approx(5.0));
    CHECK(g.sharpened == doctest::Approx(0.75));
    CHECK(g.cheap >= g.tight);
    const Polynomial lin(2, {{1.0, {1, 0}}});
    CHECK_THROWS_AS(gap_bound(lin), InvalidArgument);
}

TEST_CASE("binomial logarithm") {
    auto exact = [](int n, int m) {
        double c = 1.0;
        for (int k = 1; k <= m; ++k)
            c = c * (n + k) / k;
        return c;
    };
    for (int n = 0; n <= 30; n += 3)
        for (int m = 0; m <= 12; ++m)
            CHECK(std::exp(log_binomial(n, m)) == doctest::Approx(exact(n, m)).epsilon(1e-10));
    CHECK_THROWS_AS(log_binomial(-1, 2), InvalidArgument);
}

TEST_CASE("threshold in both forms") {
    CHECK(dklt_threshold(3, 2) == doctest::Approx(1.8).epsilon(1e-12));
    CHECK(dklt_threshold(5, 3) == doctest::Approx(3.8661848383233868).epsilon(1e-12));
    CHECK(dklt_threshold(10, 4) == doctest::Approx(8.8100846485081556).epsilon(1e-12));
    for (int n = 1; n <= 200; n += 7)
        for (int m = 2; m <= 30; m += 2)
            CHECK(dklt_threshold(n, m) == doctest::Approx(dklt_threshold_product(n, m)).epsilon(1e-10));
    CHECK_THROWS_AS(dklt_threshold(3, 1), InvalidArgument);
    CHECK_THROWS_AS(dklt_threshold_product(0, 2), InvalidArgument);
}

TEST_CASE("small-instance certification against a test-local grid") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int k = 0; k < 5; ++k) {
        std::vector<Term> terms;
        for (int mask = 1; mask < 4; ++mask)
            terms.push_back({coef(rng), {mask & 1, mask >> 1 & 1}});
        const Polynomial p(2, terms);
        const GapCertificate c = certify_gap_small_instance(p, Domain::unit_box(2));
        CHECK(c.passed);
        // independent minima on a 401 x 401 grid
        double zs = 1e300, zm = 1e300;
        for (int i = 0; i <= 400; ++i)
            for (int j = 0; j <= 400; ++j) {
                const double x = i / 400.0, y = j / 400.0;
                const double a = terms[0].coeff, b = terms[1].coeff, q = terms[2].coeff;
                zs = std::min(zs, a * x + b * y + q * x * y);
                const double env = q > 0.0 ? std::max(0.0, x + y - 1.0) : std::min(x, y);
                zm = std::min(zm, a * x + b * y + q * env);
            }
        CHECK(c.z_star <= zs + 1e-12);
        CHECK(c.z_star == doctest::Approx(zs).epsilon(1e-6));
        CHECK(c.z_mon <= zm + 1e-12);
        CHECK(c.z_mon == doctest::Approx(zm).epsilon(1e-6));
        CHECK(c.gap >= -1e-9);
    }
    const Polynomial neg(2, {{-1.0, {1, 1}}});
    const GapCertificate c = certify_gap_small_instance(neg, Domain::unit_box(2));
    CHECK(c.z_star == doctest::Approx(-1.0));
    CHECK(c.gap == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(certify_gap_small_instance(Polynomial(2, {{1.0, {2, 1}}}), Domain::unit_box(2)), Unsupported);
    CHECK_THROWS_AS(certify_gap_small_instance(neg, Domain::std_simplex(2)), Unsupported);
    CHECK_THROWS_AS(certify_gap_small_instance(Polynomial(5, {{1.0, {1, 1, 0, 0, 0}}}), Domain::unit_box(5)),
                    ScaleExceeded);
}

}
