#include "monoconv/bounds.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace monoconv;

namespace {

// Diagonal-scan references for the multilinear monomial over [1,r]^n.
double ref_E(int n, double r) {
    double a = 0.0, b = 0.0;
    for (int j = 0; j < n; ++j)
        a += std::pow(r, j);
    b = a - 1.0;
    return ref::scan_max([&](double t) { return t * a - b - std::pow(t, n); }, 1.0, r);
}

double ref_D(int n, double r) {
    return ref::scan_max(
        [&](double t) {
            double env = -1e300;
            for (int i = 1; i <= n; ++i)
                env = std::max(env, std::pow(r, i - 1) * (n * t - (n - i) - r * (i - 1)));
            return std::pow(t, n) - env;
        },
        1.0, r);
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("unit-box constants") {
    // high-precision reference values
    const double c1v[] = {0.25, 0.38490017945975051, 0.47247039371057744, 0.53499224398113762, 0.58235593230964937};
    const double c2v[] = {0.25, 0.2962962962962963, 0.31640625, 0.32768, 0.33489797668038409};
    for (int d = 2; d <= 6; ++d) {
        CHECK(c1(d) == doctest::Approx(c1v[d - 2]).epsilon(1e-14));
        CHECK(c2(d) == doctest::Approx(c2v[d - 2]).epsilon(1e-14));
    }
    CHECK_THROWS_AS(c1(1), InvalidArgument);
    CHECK_THROWS_AS(c2(0), InvalidArgument);
    const BoundSet bs = bound_set(Monomial({2, 1, 1}));
    CHECK(bs.degree == 4);
    CHECK(bs.c1 == c1(4));
    // limits
    CHECK(c2(100000) == doctest::Approx(std::exp(-1.0)).epsilon(1e-5));
    CHECK(c1(1000000) < 1.0);
}

TEST_CASE("concave bound through the f-range") {
    const Monomial m({2, 1});
    const XiBound full = concave_bound_xi(m, 0.0, 1.0);
    CHECK(full.bound == doctest::Approx(c1(3)));
    CHECK(full.coord == doctest::Approx(std::pow(3.0, -0.5)));
    const XiBound clipped = concave_bound_xi(m, 0.0, 0.1);
    CHECK(clipped.xi == doctest::Approx(0.1));
    CHECK(clipped.bound == doctest::Approx(std::cbrt(0.1) - 0.1));
    const XiBound low = concave_bound_xi(m, 0.5, 1.0);
    CHECK(low.xi == doctest::Approx(0.5));
    CHECK_THROWS_AS(concave_bound_xi(m, 0.6, 0.5), InvalidArgument);
}

TEST_CASE("diagonal lower bound") {
    for (int d = 2; d <= 6; ++d) {
        const PhiBound p = lower_bound_phi(d, 0.0, 1.0);
        CHECK(p.bound == doctest::Approx(c1(d)).epsilon(1e-12));
        // stationary point beats a scan of the same segment
        const double t1 = 0.2, t2 = 0.9;
        const PhiBound q = lower_bound_phi(d, t1, t2);
        const double scan = ref::scan_max([&](double xi) { return phi_diagonal(d, t1, t2, xi); }, 0.0, 1.0);
        CHECK(q.bound == doctest::Approx(scan).epsilon(1e-10));
    }
    CHECK_THROWS_AS(lower_bound_phi(3, 0.5, 0.5), InvalidArgument);
}

TEST_CASE("gamma bound") {
    CHECK(gamma_bound(Point{1.0, 1.0, 1.0}) == doctest::Approx(c2(3)));
    CHECK(gamma_bound(Point{1.5, 1.0}) == doctest::Approx(std::pow(0.6, 2.5)));
    CHECK_THROWS_AS(gamma_bound(Point{1.0}), InvalidArgument);
    CHECK_THROWS_AS(gamma_bound(Point{0.5, 2.0}), InvalidArgument);
}

TEST_CASE("simplex bounds") {
    const SimplexBounds a = simplex_bounds(Monomial({2, 1}));
    CHECK(a.conc == doctest::Approx(0.38098553584125168).epsilon(1e-14));
    CHECK(a.cvx == doctest::Approx(4.0 / 27.0).epsilon(1e-14));
    const SimplexBounds b = simplex_bounds(Monomial({1, 1}));
    CHECK(b.conc == doctest::Approx(0.25));
    CHECK(b.cvx == doctest::Approx(0.25));
    const SimplexBounds c = simplex_bounds(Monomial::symmetric(3, 2));
    CHECK(c.cvx == doctest::Approx(std::pow(1.0 / 3.0, 6)));
    // large degree stays finite through the log form
    const SimplexBounds big = simplex_bounds(Monomial::symmetric(50, 30));
    CHECK(std::isfinite(big.conc));
    CHECK(big.cvx >= 0.0);
    CHECK_THROWS_AS(simplex_bounds(Monomial({3})), InvalidArgument);
}

TEST_CASE("sigma rules") {
    const Monomial m({2, 1});
    CHECK(sigma_beta(m, Domain::unit_box(2), Point{2.0, 1.0}).exact());
    CHECK(sigma_beta(m, Domain::unit_box(2), Point{2.0, 1.0}).lo == 1.0);
    const SigmaInterval u = sigma_beta(m, Domain::unit_box(2), Point{1.0, 1.0});
    CHECK(u.lo == 0.0);
    CHECK(u.hi == 1.0);
    CHECK_FALSE(u.hi_open);
    const SigmaInterval s = sigma_beta(m, Domain::std_simplex(2), Point{2.0, 1.0});
    CHECK(s.hi == 3.0);
    CHECK(s.hi_open);
    const SigmaInterval c = sigma_beta(Monomial({1, 1, 1}), Domain::complement_simplex(3), Point{3.0, 1.5, 2.0});
    CHECK(c.exact());
    CHECK(c.lo == 1.5);
    CHECK_THROWS_AS(sigma_beta(m, Domain::ratio_box(2, 2.0), Point{1.0, 1.0}), Unsupported);
    CHECK_THROWS_AS(sigma_beta(m, Domain::unit_box(2), Point{1.0}), InvalidArgument);
}

TEST_CASE("fixed point constant") {
    const Monomial m({2, 2});
    const Point beta{2.0, 2.0};
    CHECK(r_beta_kappa(beta, Point{1.0, 2.0}) == 2.0);
    CHECK(c_beta_kappa(m, beta, Point{2.0, 2.0}, 1.0) == doctest::Approx(c2(4)));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        const Point b{1.0 + 2.0 * u(rng), 1.0 + 2.0 * u(rng)};
        const Point kap{1.0 + u(rng), 1.0};
        const double sigma = 0.99 * (b[0] + b[1]) * u(rng);
        const double c = c_beta_kappa(m, b, kap, sigma);
        CHECK(phi_beta_kappa(b, kap, sigma, c) == doctest::Approx(c).epsilon(1e-12));
    }
    CHECK_THROWS_AS(c_beta_kappa(m, beta, Point{3.0, 1.0}, 0.5), InvalidArgument);
    CHECK_THROWS_AS(c_beta_kappa(m, Point{1.0, 1.0}, Point{2.0, 2.0}, 0.5), InvalidArgument);
    CHECK_THROWS_AS(c_beta_kappa(m, beta, beta, 4.0), InvalidArgument);
    CHECK_THROWS_AS(r_beta_kappa(beta, Point{0.0, 1.0}), InvalidArgument);
}

TEST_CASE("relaxation bound over a family") {
    const Monomial m({2, 1});
    const std::vector<BetaSigma> exact = {{{2.0, 1.0}, 1.0}};
    CHECK(errenv_kappa_candidates(m, exact) == std::vector<Point>{{2.0, 1.0}});
    CHECK(errenv_bound(m, exact) == doctest::Approx(c2(3)));
    // a family of weaker slopes needs more than one candidate
    const std::vector<BetaSigma> weak = {{{1.5, 1.0}, 1.0}, {{2.0, 1.0}, 1.0}};
    const auto cand = errenv_kappa_candidates(m, weak);
    CHECK(cand.size() == 1);
    const std::vector<BetaSigma> both_low = {{{1.5, 1.5}, 1.0}};
    const auto cand2 = errenv_kappa_candidates(Monomial({2, 2}), both_low);
    CHECK(cand2 == std::vector<Point>{{1.5, 2.0}, {2.0, 1.5}});
    CHECK(errenv_bound(m, weak) <= errenv_bound(m, exact) + 1e-15);
    CHECK_THROWS_AS(errenv_bound(m, std::vector<BetaSigma>{}), InvalidArgument);
}

TEST_CASE("ratio-box constants match diagonal references") {
    struct Case {
        int n;
        double r, D, E, relaxed;
    };
    // high-precision diagonal maxima
    const Case cases[] = {
        {3, 2.0, 0.62962962962962963, 1.1284510810424178, 1.0973936899862826},
        {3, 1.5, 0.12037037037037037, 0.23463484083734012, 0.2322962962962963},
        {4, 2.0, 1.37890625, 3.4781828459904561, 3.2428431512911287},
        {5, 3.0, 37.81376, 94.698593223320363, 74.8997587232},
        {6, 1.2, 0.045473272976680359, 0.222235774578345, 0.21865549163666381},
    };
    for (const auto& c : cases) {
        CAPTURE(c.n);
        CAPTURE(c.r);
        const RatioConstants k = ratio_box_constants(c.n, c.r);
        CHECK(k.D == doctest::Approx(c.D).epsilon(1e-12));
        CHECK(k.E == doctest::Approx(c.E).epsilon(1e-12));
        CHECK(relaxed_convex_error(c.n, c.r).error == doctest::Approx(c.relaxed).epsilon(1e-9));
        CHECK(static_cast<double>(k.log_D) == doctest::Approx(std::log(c.D)));
        CHECK(k.D <= k.E);
        CHECK(relaxed_convex_error(c.n, c.r).error <= k.E + 1e-12);
    }
    CHECK(ratio_box_constants(2, 2.0).D == doctest::Approx(0.25));
    CHECK(ratio_box_constants(2, 2.0).E == doctest::Approx(0.25));
    CHECK(ratio_box_constants(3, 2.0).argmax_i == 2);
}

TEST_CASE("ratio-box constants against test-local scans") {
    for (int n = 2; n <= 7; ++n)
        for (double r : {1.05, 1.7, 2.5, 6.0}) {
            CAPTURE(n);
            CAPTURE(r);
            const RatioConstants k = ratio_box_constants(n, r);
            CHECK(k.E == doctest::Approx(ref_E(n, r)).epsilon(1e-9));
            CHECK(k.D == doctest::Approx(ref_D(n, r)).epsilon(1e-9));
        }
}

TEST_CASE("ratio constants stay accurate near r = 1 and for large n") {
    const RatioConstants k = ratio_box_constants(4, 1.0 + 1e-6);
    CHECK(k.D > 0.0);
    CHECK(k.E > 0.0);
    CHECK(k.D <= k.E);
    const RatioConstants big = ratio_box_constants(1000, 2.0);
    CHECK(std::isinf(big.D) == false);
    CHECK(big.log_D < big.log_E);
    CHECK_THROWS_AS(ratio_box_constants(20000, 2.0), ScaleExceeded);
    CHECK_THROWS_AS(ratio_box_constants(1, 2.0), InvalidArgument);
    CHECK_THROWS_AS(ratio_box_constants(3, 1.0), InvalidArgument);
}

TEST_CASE("concave error relative to growth converges slowly to one") {
    CHECK(e_over_growth(100, 2.0) == doctest::Approx(0.90328522873944966).epsilon(1e-12));
    CHECK(e_over_growth(1000, 2.0) == doctest::Approx(0.98560936377572841).epsilon(1e-12));
    CHECK(e_over_growth(10000, 2.0) == doctest::Approx(0.99809728665411479).epsilon(1e-10));
    double prev = 0.0;
    for (int n = 2; n <= 2000; n += 37) {
        const double v = e_over_growth(n, 2.0);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(d_over_growth(100, 10.0) <= std::exp(-1.0));
}

TEST_CASE("psi derivative and case bound") {
    for (double t : {0.1, 0.4, 0.77}) {
        const double h = 1e-6;
        const double fd = (psi(5, 2.0, t + h) - psi(5, 2.0, t - h)) / (2 * h);
        CHECK(psi_prime(5, 2.0, t) == doctest::Approx(fd).epsilon(1e-6));
    }
    for (int n = 2; n <= 40; n += 3)
        for (double r : {1.01, 1.5, 2.0, 5.0, 10.0}) {
            CAPTURE(n);
            CAPTURE(r);
            const DBound db = d_bound_cases(n, r);
            const RatioConstants k = ratio_box_constants(n, r);
            CHECK(db.bound >= k.D * (1.0 - 1e-12));
            CHECK(db.t_star > 0.0);
            CHECK(db.t_starstar >= 0.0);
            CHECK(db.t_starstar <= 1.0);
            if (db.which == DCase::exact_first)
                CHECK(db.bound == doctest::Approx(psi(n, r, (n - 1.0) / n)));
        }
    CHECK(to_string(DCase::middle) == "middle");
}

TEST_CASE("symmetric-box error") {
    CHECK(symbox_error(2) == 1.0);
    CHECK(symbox_error(3) == doctest::Approx(28.0 / 27.0));
    CHECK(symbox_error(4) == doctest::Approx(1.0625));
    // approaches 1 + e^-2 from below with gap of order 2 e^-2 / n
    const double lim = 1.0 + std::exp(-2.0);
    for (int n : {50, 200, 1000, 100000}) {
        CHECK(symbox_error(n) < lim);
        CHECK(lim - symbox_error(n) <= 2.0 * std::exp(-2.0) / n * 1.05);
    }
    const auto pts = symbox_attainment_points(3);
    CHECK(pts.size() == 8);
    for (const auto& [x, w] : pts)
        CHECK(std::fabs(w - ref::prod(x)) == doctest::Approx(symbox_error(3)));
    CHECK_THROWS_AS(symbox_error(1), InvalidArgument);
    CHECK_THROWS_AS(symbox_attainment_points(21), ScaleExceeded);
}

TEST_CASE("root of the univariate polynomial") {
    const RootResult a = find_root_exp1(3, 2.0);
    REQUIRE(a.status == RootStatus::root);
    CHECK(a.root == doctest::Approx(0.38196601125010515).epsilon(1e-14));
    CHECK(find_root_exp1(5, 3.0).root == doctest::Approx(0.25872908943399795).epsilon(1e-14));
    for (int l1 = 2; l1 <= 10; ++l1)
        for (double l2 = 1.0; l2 < l1; l2 += 0.37) {
            const RootResult rr = find_root_exp1(l1, l2);
            REQUIRE(rr.status == RootStatus::root);
            CHECK(rr.residual <= 1e-12);
            CHECK(rr.root > rr.lower_bound);
            // sign pattern: negative just inside, positive past the root (unless the root is 1)
            if (rr.root < 1.0 - 1e-9) {
                CHECK(exp1_phi(l1, l2, 0.5 * rr.root) < 0.0);
                CHECK(exp1_phi(l1, l2, 0.5 * (rr.root + 1.0)) > 0.0);
            }
        }
    const RootResult none = find_root_exp1(3, 3.0);
    CHECK(none.status == RootStatus::no_root);
    CHECK(none.certificate > 0.0);
    CHECK(find_root_exp1(4, 1.0).root == doctest::Approx(1.0));
    CHECK_THROWS_AS(find_root_exp1(0, 2.0), InvalidArgument);
    CHECK_THROWS_AS(find_root_exp1(3, 0.5), InvalidArgument);
}

TEST_CASE("logarithmic inequality chain") {
    const DineqResult two = dineq_check(2);
    CHECK(two.holds);
    CHECK(two.second_equal);
    for (int d = 3; d <= 200; ++d) {
        const DineqResult r = dineq_check(d);
        CHECK(r.holds);
        CHECK_FALSE(r.second_equal);
        CHECK(r.lhs == doctest::Approx((d - 1.0) * (d - 1.0) * std::log(d)));
    }
    CHECK_THROWS_AS(dineq_check(1), InvalidArgument);
}

}
