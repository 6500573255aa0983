#include "monoconv/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace monoconv {
namespace {

using ld = long double;

void require_degree(int d) {
    if (d < 2)
        throw InvalidArgument("degree must be >= 2, got " + std::to_string(d));
}

void require_ratio(int n, double r) {
    if (n < 2)
        throw InvalidArgument("ratio box constants need n >= 2");
    if (!(r > 1.0))
        throw InvalidArgument("ratio box needs r > 1");
    // Long double holds r^n up to about e^11356.
    if (n * std::log(r) > 11000.0)
        throw ScaleExceeded("r^n exceeds the long double range");
}

void require_beta(std::span<const double> beta, int n) {
    if (static_cast<int>(beta.size()) != n)
        throw InvalidArgument("beta has the wrong dimension");
    for (double b : beta)
        if (!(b >= 1.0))
            throw InvalidArgument("beta entries must be >= 1");
}

// (1 + i h / n)^n - r^i with r = 1 + h, kept accurate when both terms nearly cancel.
ld diag_gap(int n, ld h, ld t) {
    const ld lr = std::log1p(h);
    const ld a = n * std::log1p(t * h);
    const ld b = n * t * lr;
    return std::exp(b) * std::expm1(a - b);
}

// (r^n - 1) / (n (r - 1)) - 1, i.e. the mean of r^k - 1 over k = 0..n-1.
ld growth_excess(int n, ld h) {
    const ld lr = std::log1p(h);
    ld s = 0.0L;
    for (int k = 1; k < n; ++k)
        s += std::expm1(k * lr);
    return s / n;
}

ld concave_ratio_error(int n, ld h) {
    const ld eps = growth_excess(n, h);
    const ld p = static_cast<ld>(n) / (n - 1);
    return (n - 1) * (std::expm1(p * std::log1p(eps)) - p * eps);
}

ld convex_ratio_error(int n, ld h, int* argmax) {
    ld best = -std::numeric_limits<ld>::infinity();
    for (int i = 1; i <= n - 1; ++i) {
        ld v = diag_gap(n, h, static_cast<ld>(i) / n);
        if (v > best) {
            best = v;
            if (argmax)
                *argmax = i;
        }
    }
    return best;
}

}  // namespace

double c1(int d) {
    require_degree(d);
    return (1.0 - 1.0 / d) * std::pow(static_cast<double>(d), 1.0 / (1.0 - d));
}

double c2(int d) {
    require_degree(d);
    return std::pow(1.0 - 1.0 / d, d);
}

BoundSet bound_set(const Monomial& m) {
    m.require_error_degree();
    return {c1(m.degree()), c2(m.degree()), m.degree()};
}

XiBound concave_bound_xi(const Monomial& m, double fmin, double fmax) {
    m.require_error_degree();
    if (!(0.0 <= fmin && fmin <= fmax && fmax <= 1.0))
        throw InvalidArgument("need 0 <= fmin <= fmax <= 1");
    const int d = m.degree();
    const double peak = std::pow(static_cast<double>(d), static_cast<double>(d) / (1.0 - d));
    const double xi = std::min(std::max(fmin, peak), fmax);
    const double coord = std::pow(xi, 1.0 / d);
    return {coord - xi, xi, coord};
}

double gamma_bound(std::span<const double> gamma) {
    if (gamma.empty())
        throw InvalidArgument("gamma must be nonempty");
    for (double g : gamma)
        if (!(g >= 1.0))
            throw InvalidArgument("gamma entries must be >= 1");
    const double dg = std::accumulate(gamma.begin(), gamma.end(), 0.0);
    if (!(dg > 1.0))
        throw InvalidArgument("sum of gamma must exceed 1");
    return std::pow(1.0 - 1.0 / dg, dg);
}

double phi_diagonal(int d, double t1, double t2, double xi) {
    return int_pow(t1, d) + (int_pow(t2, d) - int_pow(t1, d)) * xi - int_pow(t1 + (t2 - t1) * xi, d);
}

PhiBound lower_bound_phi(int d, double t1, double t2) {
    require_degree(d);
    if (!(0.0 <= t1 && t1 < t2))
        throw InvalidArgument("need 0 <= t1 < t2");
    const double span = t2 - t1;
    const double slope = (int_pow(t2, d) - int_pow(t1, d)) / d;
    double xi = std::pow(slope, 1.0 / (d - 1)) * std::pow(span, static_cast<double>(d) / (1.0 - d)) - t1 / span;
    xi = std::clamp(xi, 0.0, 1.0);
    return {phi_diagonal(d, t1, t2, xi), xi};
}

SimplexBounds simplex_bounds(const Monomial& m) {
    if (m.dim() < 2)
        throw InvalidArgument("simplex bounds need n >= 2");
    m.require_error_degree();
    const int d = m.degree();
    double log_aa = 0.0;
    for (int a : m.exponents())
        log_aa += a * std::log(static_cast<double>(a));
    const double cvx = std::exp(log_aa - d * std::log(static_cast<double>(d)));
    const double conc = std::exp(log_aa / d) / d - cvx;
    return {conc, cvx};
}

SigmaInterval sigma_beta(const Monomial& m, const Domain& dom, std::span<const double> beta) {
    require_beta(beta, m.dim());
    if (dom.dim() != m.dim())
        throw InvalidArgument("domain and monomial dimensions differ");
    if (!dom.in_unit_cube())
        throw Unsupported("sigma(beta) is only available for domains inside [0,1]^n, got " + dom.name());
    const double db = std::accumulate(beta.begin(), beta.end(), 0.0);

    if (dom.kind() == DomainKind::complement_simplex) {
        double s = *std::min_element(beta.begin(), beta.end());
        return {s, s};
    }
    // With 1 in S and beta >= alpha, 1 + beta^T(x - 1) <= 1 + alpha^T(x - 1) <= x^alpha on [0,1]^n
    // and equality holds at x = 1.
    const Point ones(static_cast<std::size_t>(m.dim()), 1.0);
    bool dominates = true;
    for (int j = 0; j < m.dim(); ++j)
        dominates = dominates && beta[static_cast<std::size_t>(j)] >= m[static_cast<std::size_t>(j)];
    if (dominates && dom.contains(ones))
        return {1.0, 1.0};
    if (dom.kind() == DomainKind::unit_box)
        return {0.0, 1.0};
    return {0.0, db, true};
}

double r_beta_kappa(std::span<const double> beta, std::span<const double> kappa) {
    if (beta.size() != kappa.size() || beta.empty())
        throw InvalidArgument("beta and kappa dimensions differ");
    double r = 0.0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (!(kappa[j] > 0.0))
            throw InvalidArgument("kappa entries must be positive");
        r = std::max(r, beta[j] / kappa[j]);
    }
    return r;
}

double phi_beta_kappa(std::span<const double> beta, std::span<const double> kappa, double sigma, double t) {
    const double db = std::accumulate(beta.begin(), beta.end(), 0.0);
    const double r = r_beta_kappa(beta, kappa);
    return db - sigma + t - db * std::pow(t, r / db);
}

double c_beta_kappa(const Monomial& m, std::span<const double> beta, std::span<const double> kappa, double sigma) {
    require_beta(beta, m.dim());
    if (static_cast<int>(kappa.size()) != m.dim())
        throw InvalidArgument("kappa has the wrong dimension");
    bool below_somewhere = false;
    for (int j = 0; j < m.dim(); ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (!(kappa[uj] >= 1.0 && kappa[uj] <= m[uj]))
            throw InvalidArgument("kappa must satisfy 1 <= kappa <= alpha");
        below_somewhere = below_somewhere || kappa[uj] <= beta[uj];
    }
    if (!below_somewhere)
        throw InvalidArgument("kappa exceeds beta in every coordinate");
    const double db = std::accumulate(beta.begin(), beta.end(), 0.0);
    if (!(sigma >= 0.0 && sigma < db))
        throw InvalidArgument("sigma must lie in [0, d_beta)");
    const double r = r_beta_kappa(beta, kappa);
    return std::pow(1.0 - sigma / db, db / r);
}

std::vector<Point> errenv_kappa_candidates(const Monomial& m, std::span<const BetaSigma> family) {
    if (family.empty())
        throw InvalidArgument("the family B is empty");
    const int n = m.dim();
    Point min_beta(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    for (const auto& bs : family) {
        require_beta(bs.beta, n);
        for (int j = 0; j < n; ++j)
            min_beta[static_cast<std::size_t>(j)] = std::min(min_beta[static_cast<std::size_t>(j)], bs.beta[static_cast<std::size_t>(j)]);
    }
    Point alpha(m.exponents().begin(), m.exponents().end());
    for (int j = 0; j < n; ++j)
        if (alpha[static_cast<std::size_t>(j)] <= min_beta[static_cast<std::size_t>(j)])
            return {alpha};
    std::vector<Point> out;
    for (int j = 0; j < n; ++j) {
        Point k = alpha;
        k[static_cast<std::size_t>(j)] = min_beta[static_cast<std::size_t>(j)];
        out.push_back(std::move(k));
    }
    return out;
}

double errenv_bound(const Monomial& m, std::span<const BetaSigma> family) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& kappa : errenv_kappa_candidates(m, family)) {
        double inf_beta = std::numeric_limits<double>::infinity();
        for (const auto& bs : family)
            inf_beta = std::min(inf_beta, c_beta_kappa(m, bs.beta, kappa, bs.sigma));
        best = std::min(best, inf_beta);
    }
    return best;
}

RatioConstants ratio_box_constants(int n, double r) {
    require_ratio(n, r);
    const ld h = static_cast<ld>(r) - 1.0L;
    RatioConstants out{};
    out.argmax_i = 1;
    const ld D = convex_ratio_error(n, h, &out.argmax_i);
    const ld E = concave_ratio_error(n, h);
    out.D = static_cast<double>(D);
    out.E = static_cast<double>(E);
    out.log_D = std::log(D);
    out.log_E = std::log(E);
    return out;
}

RelaxedRatio relaxed_convex_error(int n, double r) {
    require_ratio(n, r);
    const ld h = static_cast<ld>(r) - 1.0L;
    const ld lr = std::log1p(h);
    // Kink of max{sum x - (n-1), r^{n-1}(sum x - r(n-1))} on the diagonal, written as 1 + delta.
    const ld gn = std::expm1(n * lr);
    const ld gn1 = std::expm1((n - 1) * lr);
    ld delta = ((n - 1) * gn - n * gn1) / (n * gn1);
    delta = std::clamp(delta, 0.0L, h);
    const ld err = std::expm1(n * std::log1p(delta)) - n * delta;
    return {static_cast<double>(err), std::log(err), static_cast<double>(1.0L + delta)};
}

double e_over_growth(int n, double r) {
    require_ratio(n, r);
    const ld h = static_cast<ld>(r) - 1.0L;
    return static_cast<double>(concave_ratio_error(n, h) / std::expm1(n * std::log1p(h)));
}

double d_over_growth(int n, double r) {
    require_ratio(n, r);
    const ld h = static_cast<ld>(r) - 1.0L;
    return static_cast<double>(convex_ratio_error(n, h, nullptr) / std::expm1(n * std::log1p(h)));
}

std::string_view to_string(DCase c) noexcept {
    switch (c) {
        case DCase::exact_first: return "first";
        case DCase::middle: return "middle";
        case DCase::last: return "last";
    }
    return "?";
}

double psi(int n, double r, double t) {
    return static_cast<double>(diag_gap(n, static_cast<ld>(r) - 1.0L, t));
}

double psi_prime(int n, double r, double t) {
    const ld h = static_cast<ld>(r) - 1.0L;
    const ld lr = std::log1p(h);
    return static_cast<double>(n * h * std::pow(1.0L + h * t, n - 1) - n * lr * std::exp(n * t * lr));
}

DBound d_bound_cases(int n, double r) {
    require_ratio(n, r);
    constexpr int kScan = 10000;
    const ld h = static_cast<ld>(r) - 1.0L;
    const ld lr = std::log1p(h);

    // t*: first sign change of psi' from + to -.
    double t_star = 1.0;
    double prev_t = 0.0;
    double prev_d = psi_prime(n, r, 0.0);
    for (int k = 1; k <= kScan; ++k) {
        const double t = static_cast<double>(k) / kScan;
        const double dv = psi_prime(n, r, t);
        if (prev_d > 0.0 && dv <= 0.0) {
            double lo = prev_t, hi = t;
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                (psi_prime(n, r, mid) > 0.0 ? lo : hi) = mid;
            }
            t_star = 0.5 * (lo + hi);
            break;
        }
        prev_t = t;
        prev_d = dv;
    }

    // t**: scan, then golden section in the neighbouring cells.
    int best_k = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= kScan; ++k) {
        const double v = psi(n, r, static_cast<double>(k) / kScan);
        if (v > best_v) {
            best_v = v;
            best_k = k;
        }
    }
    double a = std::max(0.0, (best_k - 1.0) / kScan);
    double b = std::min(1.0, (best_k + 1.0) / kScan);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = psi(n, r, x1), f2 = psi(n, r, x2);
    for (int it = 0; it < 100 && b - a > 1e-14; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = psi(n, r, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = psi(n, r, x1);
        }
    }
    const double t_ss = 0.5 * (a + b);

    const double edge = static_cast<double>(n - 1) / n;
    const ld q = std::pow(lr / h, static_cast<ld>(n) / (n - 1));
    DBound out{};
    out.t_star = t_star;
    out.t_starstar = t_ss;
    if (t_star >= edge) {
        out.which = DCase::exact_first;
        out.bound = static_cast<double>(diag_gap(n, h, static_cast<ld>(n - 1) / n));
    } else if (t_ss <= edge) {
        out.which = DCase::middle;
        out.bound = static_cast<double>(std::exp(n * lr) * q - std::exp((n - 1) * lr));
    } else {
        out.which = DCase::last;
        out.bound = static_cast<double>(std::exp(static_cast<ld>(n) * n / (n - 1) * lr) * q - std::exp(n * lr));
    }
    return out;
}

double symbox_error(int n) {
    if (n < 2)
        throw InvalidArgument("symmetric box error needs n >= 2");
    return 1.0 + int_pow(static_cast<double>(n - 2) / n, n);
}

std::vector<std::pair<Point, double>> symbox_attainment_points(int n) {
    if (n < 2)
        throw InvalidArgument("symmetric box error needs n >= 2");
    if (n > 20)
        throw ScaleExceeded("reflection enumeration refuses n > 20");
    const double c = static_cast<double>(n - 2) / n;
    std::vector<std::pair<Point, double>> out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        Point x(static_cast<std::size_t>(n), c);
        int flips = 0;
        for (int j = 0; j < n; ++j)
            if (mask >> j & 1U) {
                x[static_cast<std::size_t>(j)] = -c;
                ++flips;
            }
        out.emplace_back(std::move(x), flips % 2 == 0 ? -1.0 : 1.0);
    }
    return out;
}

double exp1_phi(int lambda1, double lambda2, double s) {
    return int_pow(1.0 - s, lambda1) + lambda2 * s - 1.0;
}

RootResult find_root_exp1(int lambda1, double lambda2) {
    if (lambda1 < 1)
        throw InvalidArgument("lambda1 must be an integer >= 1");
    if (!(lambda2 >= 1.0))
        throw InvalidArgument("lambda2 must be >= 1");
    RootResult out{};
    if (lambda2 >= lambda1) {
        out.status = RootStatus::no_root;
        double cert = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= 1000; ++k) {
            const double s = k / 1000.0;
            cert = std::min(cert, exp1_phi(lambda1, lambda2, s) / s);
        }
        out.certificate = cert;
        return out;
    }
    out.status = RootStatus::root;
    out.lower_bound = 1.0 - std::pow(lambda2 / lambda1, 1.0 / (lambda1 - 1));
    double lo = out.lower_bound;
    double hi = 1.0;
    double mid = hi;
    int it = 0;
    if (exp1_phi(lambda1, lambda2, hi) != 0.0) {
        for (; it < 200; ++it) {
            mid = 0.5 * (lo + hi);
            const double v = exp1_phi(lambda1, lambda2, mid);
            if (std::fabs(v) <= 1e-15 || hi - lo <= 1e-17)
                break;
            (v < 0.0 ? lo : hi) = mid;
        }
    }
    out.root = mid;
    out.residual = std::fabs(exp1_phi(lambda1, lambda2, mid));
    out.iterations = it;
    return out;
}

DineqResult dineq_check(int d) {
    require_degree(d);
    const double ld_ = std::log(static_cast<double>(d));
    const double lhs = (d - 1.0) * (d - 1.0) * ld_;
    const double mid = d * (d - 2.0) * ld_;
    const double rhs = (d - 1.0) * (d - 1.0) * std::log(d - 1.0);
    const double tol = 1e-12 * std::max(1.0, std::fabs(mid));
    const bool equal = std::fabs(mid - rhs) <= tol;
    return {lhs > mid && (mid > rhs || equal), equal, lhs, mid, rhs};
}

}  // namespace monoconv
