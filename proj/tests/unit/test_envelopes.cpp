#include "monoconv/envelopes.hpp"
#include "monoconv/oracle.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace monoconv;

namespace {

Point random_point(std::mt19937_64& rng, int n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    Point x(static_cast<std::size_t>(n));
    for (auto& v : x)
        v = u(rng);
    return x;
}

}  // namespace

TEST_SUITE("envelopes") {

TEST_CASE("linear underestimator") {
    const LinearUnderestimator l(Point{2.0, 1.0}, 0.5);
    CHECK(l.degree_beta() == 3.0);
    CHECK(l(Point{1.0, 1.0}) == 0.5);
    CHECK(l(Point{0.5, 1.0}) == doctest::Approx(-0.5));
    CHECK(underestimator_value(l, Point{1.0, 0.0}) == doctest::Approx(-0.5));
    CHECK(LinearUnderestimator::exact_at_one(Point{1.0}).intercept() == 1.0);
    CHECK_THROWS_AS(LinearUnderestimator(Point{0.5, 1.0}, 1.0), InvalidArgument);
    CHECK_THROWS_AS(l(Point{1.0}), InvalidArgument);
}

TEST_CASE("unit-box envelopes sandwich the monomial and are exact at vertices") {
    std::mt19937_64 rng(1);
    for (const auto& a : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 1, 1}, {3, 1, 2}}) {
        const Monomial m(a);
        const int n = m.dim();
        for (int k = 0; k < 200; ++k) {
            const Point x = random_point(rng, n, 0.0, 1.0);
            const double f = eval_monomial(m, x);
            CHECK(concave_env_unitbox(m, x) >= f - 1e-15);
            if (m.is_multilinear())
                CHECK(convex_env_unitbox_multilinear(n, x) <= f + 1e-15);
        }
        for (const auto& v : Domain::unit_box(n).vertices()) {
            CHECK(concave_env_unitbox(m, v) == doctest::Approx(eval_monomial(m, v)));
            if (m.is_multilinear())
                CHECK(convex_env_unitbox_multilinear(n, v) == doctest::Approx(eval_monomial(m, v)));
        }
    }
    CHECK_THROWS_AS(concave_env_unitbox(Monomial({1, 1}), Point{0.5, 1.5}), InvalidArgument);
}

TEST_CASE("unit-box envelopes agree with the vertex LP") {
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 4; ++n) {
        const Monomial m = Monomial::multilinear(n);
        const Domain box = Domain::unit_box(n);
        for (int k = 0; k < 25; ++k) {
            const Point x = random_point(rng, n, 0.0, 1.0);
            CHECK(concave_env_unitbox(m, x) == doctest::Approx(sampled_hull_envelope(m, box, x, Side::over)).epsilon(1e-9));
            CHECK(convex_env_unitbox_multilinear(n, x) ==
                  doctest::Approx(sampled_hull_envelope(m, box, x, Side::under)).epsilon(1e-9));
        }
    }
}

TEST_CASE("gamma vector") {
    const Monomial m({2, 1, 3});
    const Point g = gamma_vector(m, Domain::unit_box(3));
    CHECK(g == Point{2.0, 1.0, 3.0});
    const Point h = gamma_vector(m, Domain::sub_box(Point{0.0, 0.0, 0.0}, Point{0.5, 1.0, 0.5}));
    CHECK(h[0] == doctest::Approx(1.5));
    CHECK(h[1] == doctest::Approx(1.0));
    CHECK(h[2] == doctest::Approx(1.75));
    CHECK(gamma_vector(m, Point{0.5, 1.0, 0.5}) == h);
    // upper end 0: the chord collapses to 1 in every exponent
    CHECK(gamma_vector(Monomial({4}), Point{0.0})[0] == doctest::Approx(1.0));
    CHECK_THROWS_AS(gamma_vector(Monomial({1, 1}), Domain::ratio_box(2, 2.0)), Unsupported);
}

TEST_CASE("gamma underestimator holds on random sub-boxes") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 30; ++k) {
        const Monomial m({1 + k % 3, 1 + (k / 3) % 2});
        Point lo{0.5 * u(rng), 0.5 * u(rng)};
        Point up{lo[0] + (1.0 - lo[0]) * u(rng), lo[1] + (1.0 - lo[1]) * u(rng)};
        const Domain dom = Domain::sub_box(lo, up);
        const LinearUnderestimator l(gamma_vector(m, dom), 1.0);
        for (int i = 0; i <= 40; ++i)
            for (int j = 0; j <= 40; ++j) {
                const Point x{lo[0] + (up[0] - lo[0]) * i / 40.0, lo[1] + (up[1] - lo[1]) * j / 40.0};
                CHECK(l(x) <= eval_monomial(m, x) + 1e-12);
            }
    }
}

TEST_CASE("necessary validity conditions") {
    const Monomial m({2, 1});
    const auto ok = necessary_validity_conditions(m, Domain::unit_box(2), Point{2.0, 1.0});
    CHECK(ok.satisfied);
    CHECK(ok.indices == std::vector<int>{0, 1});
    CHECK(ok.min_beta == std::vector<double>{2.0, 1.0});
    const auto bad = necessary_validity_conditions(m, Domain::unit_box(2), Point{1.5, 1.0});
    CHECK_FALSE(bad.satisfied);
    // the simplex never contains an edge at 1 beyond its endpoint
    const auto sx = necessary_validity_conditions(m, Domain::std_simplex(2), Point{1.0, 1.0});
    CHECK(sx.indices.empty());
    CHECK(sx.satisfied);
    // beta above alpha imposes nothing on that coordinate
    const auto above = necessary_validity_conditions(m, Domain::unit_box(2), Point{3.0, 1.0});
    CHECK(above.indices == std::vector<int>{1});
    CHECK_THROWS_AS(necessary_validity_conditions(m, Domain::unit_box(2), Point{0.5, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(necessary_validity_conditions(m, Domain::sym_box(2), Point{1.0, 1.0}), Unsupported);
}

TEST_CASE("ratio-box concave envelope matches the permutation minimum") {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 5; ++n)
        for (double r : {1.3, 2.0, 4.0})
            for (int k = 0; k < 20; ++k) {
                const Point x = random_point(rng, n, 1.0, r);
                CHECK(concave_env_ratiobox(n, r, x) ==
                      doctest::Approx(ref::concave_env_by_permutations(x, 1.0, r)).epsilon(1e-12));
            }
}

TEST_CASE("ratio-box envelopes agree with the vertex LP") {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 4; ++n) {
        const double r = 1.0 + 0.5 * n;
        const Monomial m = Monomial::multilinear(n);
        const Domain box = Domain::ratio_box(n, r);
        for (int k = 0; k < 15; ++k) {
            const Point x = random_point(rng, n, 1.0, r);
            CHECK(concave_env_ratiobox(n, r, x) == doctest::Approx(sampled_hull_envelope(m, box, x, Side::over)).epsilon(1e-9));
            CHECK(convex_env_ratiobox(n, r, x) == doctest::Approx(sampled_hull_envelope(m, box, x, Side::under)).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(convex_env_ratiobox(2, 2.0, Point{0.5, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(concave_env_ratiobox(2, 1.0, Point{1.0, 1.0}), InvalidArgument);
}

TEST_CASE("symmetric-box closed form equals enumeration") {
    std::mt19937_64 rng(6);
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k < 30; ++k) {
            Point x = random_point(rng, n, -1.0, 1.0);
            if (k % 5 == 0)
                x[0] = 0.0;  // ties in the smallest magnitude
            const SymEnvelope a = envelopes_symbox_enumerated(n, x);
            const SymEnvelope b = envelopes_symbox_closed_form(n, x);
            CHECK(a.lo == doctest::Approx(b.lo).epsilon(1e-12));
            CHECK(a.hi == doctest::Approx(b.hi).epsilon(1e-12));
            const double f = ref::prod(x);
            CHECK(a.lo <= f + 1e-12);
            CHECK(a.hi >= f - 1e-12);
        }
    CHECK_THROWS_AS(envelopes_symbox_enumerated(21, Point(21, 0.0)), ScaleExceeded);
    const SymEnvelope big = envelopes_symbox(40, Point(40, 0.5));
    CHECK(big.lo <= std::pow(0.5, 40));
}

TEST_CASE("symmetric-box envelopes agree with the vertex LP") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 4; ++n) {
        const Monomial m = Monomial::multilinear(n);
        const Domain box = Domain::sym_box(n);
        for (int k = 0; k < 15; ++k) {
            const Point x = random_point(rng, n, -1.0, 1.0);
            const SymEnvelope e = envelopes_symbox(n, x);
            CHECK(e.hi == doctest::Approx(sampled_hull_envelope(m, box, x, Side::over)).epsilon(1e-9));
            CHECK(e.lo == doctest::Approx(sampled_hull_envelope(m, box, x, Side::under)).epsilon(1e-9));
        }
    }
}

}
