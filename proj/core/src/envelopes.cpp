#include "monoconv/envelopes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace monoconv {
namespace {

constexpr double kPointTol = 1e-9;
constexpr int kEnumerateLimit = 20;

void require_size(std::span<const double> x, int n) {
    if (static_cast<int>(x.size()) != n)
        throw InvalidArgument("point has dimension " + std::to_string(x.size()) + ", expected " + std::to_string(n));
}

void require_in_interval(std::span<const double> x, double lo, double hi, const char* what) {
    for (double v : x)
        if (!(v >= lo - kPointTol && v <= hi + kPointTol))
            throw InvalidArgument(std::string("point outside ") + what);
}

}  // namespace

LinearUnderestimator::LinearUnderestimator(Point beta, double intercept)
    : beta_(std::move(beta)), intercept_(intercept) {
    if (beta_.empty())
        throw InvalidArgument("beta must be nonempty");
    for (double b : beta_)
        if (!(b >= 1.0))
            throw InvalidArgument("beta entries must be >= 1");
    degree_beta_ = std::accumulate(beta_.begin(), beta_.end(), 0.0);
}

double LinearUnderestimator::operator()(std::span<const double> x) const {
    require_size(x, dim());
    double v = intercept_;
    for (std::size_t j = 0; j < beta_.size(); ++j)
        v += beta_[j] * (x[j] - 1.0);
    return v;
}

double underestimator_value(const LinearUnderestimator& u, std::span<const double> x) { return u(x); }

double concave_env_unitbox(const Monomial& m, std::span<const double> x) {
    require_size(x, m.dim());
    require_in_interval(x, 0.0, 1.0, "[0,1]^n");
    return *std::min_element(x.begin(), x.end());
}

double convex_env_unitbox_multilinear(int n, std::span<const double> x) {
    require_size(x, n);
    require_in_interval(x, 0.0, 1.0, "[0,1]^n");
    double s = 1.0;
    for (double v : x)
        s += v - 1.0;
    return std::max(0.0, s);
}

Point gamma_vector(const Monomial& m, std::span<const double> upper_projection) {
    require_size(upper_projection, m.dim());
    Point g(upper_projection.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        double u = upper_projection[i];
        if (!(u >= 0.0 && u <= 1.0))
            throw InvalidArgument("projection endpoint outside [0,1]");
        double s2 = 1.0 - u;
        g[i] = s2 > 0.0 ? (1.0 - int_pow(u, m[i])) / s2 : static_cast<double>(m[i]);
    }
    return g;
}

Point gamma_vector(const Monomial& m, const Domain& dom) {
    if (dom.dim() != m.dim())
        throw InvalidArgument("domain and monomial dimensions differ");
    if (!dom.in_unit_cube())
        throw Unsupported("gamma needs a domain inside [0,1]^n, got " + dom.name());
    Point up(static_cast<std::size_t>(dom.dim()));
    for (int j = 0; j < dom.dim(); ++j)
        up[static_cast<std::size_t>(j)] = dom.projection(j).second;
    return gamma_vector(m, up);
}

ValidityConditions necessary_validity_conditions(const Monomial& m, const Domain& dom, std::span<const double> beta) {
    require_size(beta, m.dim());
    if (dom.dim() != m.dim())
        throw InvalidArgument("domain and monomial dimensions differ");
    if (!dom.in_unit_cube())
        throw Unsupported("validity conditions need a domain inside [0,1]^n, got " + dom.name());
    for (double b : beta)
        if (!(b >= 1.0))
            throw InvalidArgument("beta entries must be >= 1");

    const int n = m.dim();
    const Point gamma = gamma_vector(m, dom);
    ValidityConditions out;

    // For each edge E_i = [1 - e_i, 1], the largest x_i of dom on it (nullopt-like NaN when the
    // edge misses the relative interior).
    auto edge_top = [&](int i) -> double {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        switch (dom.kind()) {
            case DomainKind::unit_box:
                return 1.0;
            case DomainKind::sub_box: {
                for (int k = 0; k < n; ++k)
                    if (k != i && dom.upper()[static_cast<std::size_t>(k)] < 1.0)
                        return nan;
                double lo = dom.lower()[static_cast<std::size_t>(i)];
                double hi = dom.upper()[static_cast<std::size_t>(i)];
                if (lo >= 1.0 || hi <= 0.0)
                    return nan;
                return hi;
            }
            case DomainKind::corner_simplex_one:
                return 1.0;
            default:
                // StdSimplex and ComplementSimplex touch each edge at most at its endpoint 1 - e_i.
                return nan;
        }
    };

    for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        double top = edge_top(i);
        if (std::isnan(top) || beta[ui] > m[ui])
            continue;
        double tau2 = 1.0 - top;
        double sigma2 = 1.0 - dom.projection(i).second;
        double lb = tau2 > sigma2 + 1e-15 ? m[ui] * int_pow(1.0 - tau2, m[ui] - 1) : gamma[ui];
        out.indices.push_back(i);
        out.min_beta.push_back(lb);
        if (beta[ui] < lb - 1e-12)
            out.satisfied = false;
    }
    return out;
}

double concave_env_ratiobox(int n, double r, std::span<const double> x) {
    if (!(r > 1.0))
        throw InvalidArgument("ratio box needs r > 1");
    require_size(x, n);
    require_in_interval(x, 1.0, r, "[1,r]^n");
    std::vector<double> s(x.begin(), x.end());
    std::stable_sort(s.begin(), s.end(), std::greater<>());
    double v = 0.0;
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
        v += w * s[static_cast<std::size_t>(j)];
        if (j < n - 1) {
            w *= r;
            v -= w;
        }
    }
    return v;
}

double convex_env_ratiobox(int n, double r, std::span<const double> x) {
    if (!(r > 1.0))
        throw InvalidArgument("ratio box needs r > 1");
    require_size(x, n);
    require_in_interval(x, 1.0, r, "[1,r]^n");
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    double best = -std::numeric_limits<double>::infinity();
    double w = 1.0;
    for (int i = 1; i <= n; ++i) {
        best = std::max(best, w * (sum - (n - i) - r * (i - 1)));
        w *= r;
    }
    return best;
}

SymEnvelope envelopes_symbox_enumerated(int n, std::span<const double> x) {
    require_size(x, n);
    require_in_interval(x, -1.0, 1.0, "[-1,1]^n");
    if (n > kEnumerateLimit)
        throw ScaleExceeded("symmetric-box enumeration refuses n > 20");
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    double lo = -1.0;
    double hi = 1.0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        double in = 0.0;
        for (int j = 0; j < n; ++j)
            if (mask >> j & 1U)
                in += x[static_cast<std::size_t>(j)];
        // s = sum_I x - sum_{not I} x
        const double s = 2.0 * in - total;
        if (std::popcount(mask) % 2 == 0)
            lo = std::max(lo, -s - (n - 1));
        else
            hi = std::min(hi, (n - 1) + s);
    }
    return {lo, hi};
}

SymEnvelope envelopes_symbox_closed_form(int n, std::span<const double> x) {
    require_size(x, n);
    require_in_interval(x, -1.0, 1.0, "[-1,1]^n");
    double abs_sum = 0.0;
    double min_abs = std::numeric_limits<double>::infinity();
    int negatives = 0;
    for (double v : x) {
        abs_sum += std::fabs(v);
        min_abs = std::min(min_abs, std::fabs(v));
        if (v < 0.0)
            ++negatives;
    }
    const bool even = negatives % 2 == 0;
    const double lo_best = even ? abs_sum : abs_sum - 2.0 * min_abs;
    const double hi_best = even ? -abs_sum + 2.0 * min_abs : -abs_sum;
    return {std::max(-1.0, lo_best - (n - 1)), std::min(1.0, (n - 1) + hi_best)};
}

SymEnvelope envelopes_symbox(int n, std::span<const double> x) {
    if (n < 1)
        throw InvalidArgument("dimension must be >= 1");
    return n <= kEnumerateLimit ? envelopes_symbox_enumerated(n, x) : envelopes_symbox_closed_form(n, x);
}

}  // namespace monoconv
