#pragma once

#include "monoconv/bounds.hpp"
#include "monoconv/core.hpp"
#include "monoconv/envelopes.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace monoconv {

/// Cell-centre grid followed by local line-search refinement.
struct GridSpec {
    int resolution = 0;                  ///< points per coordinate; 0 picks the default for n
    int refinement = 3;                  ///< refinement passes
    std::uint64_t max_points = 100000000;
    int restarts = -1;                   ///< random refined restarts; -1 picks 16 for n >= 5, else 0
    std::uint64_t seed = 42;
    int threads = 0;                     ///< 0 uses the hardware concurrency

    int resolution_for(int n) const;
    int restarts_for(int n) const;
};

struct MaxResult {
    double value = 0.0;
    Point argmax;
    double grid_value = 0.0;  ///< incumbent before refinement
    std::uint64_t evaluated = 0;
    GridSpec grid;
};

using Objective = std::function<double(std::span<const double>)>;

/// Maximizes g over dom. g must be defined on every point of dom.
MaxResult maximize(const Domain& dom, const Objective& g, const GridSpec& spec = {});

enum class Side { over, under };

enum class EstimatorKind {
    min_coordinate,   ///< min_j x_j over subsets of [0,1]^n
    unit_hinge,       ///< max{0, 1 + sum(x_j - 1)}
    affine_family,    ///< max{0, max_k l_k(x)}
    ratio_concave,
    ratio_convex,
    sym_upper,
    sym_lower,
    zero,
};

struct Estimator {
    EstimatorKind kind = EstimatorKind::min_coordinate;
    std::vector<LinearUnderestimator> pieces;

    static Estimator of(EstimatorKind k) { return {k, {}}; }
    static Estimator affine(std::vector<LinearUnderestimator> pieces) {
        return {EstimatorKind::affine_family, std::move(pieces)};
    }

    double operator()(const Monomial& m, const Domain& dom, std::span<const double> x) const;
    Side natural_side() const noexcept;
};

/// Grid-and-refine maximum of estimator - f (over) or f - estimator (under), compared to bound.
ErrorReport max_gap(const Monomial& m, const Domain& dom, const Estimator& est, Side side, double bound,
                    const GridSpec& spec = {}, double tol = tolerance::oracle);

enum class Sense { minimize, maximize };

struct Extremum {
    double value;
    Point argpoint;
    bool closed_form;
};

Extremum extremize_f(const Monomial& m, const Domain& dom, Sense sense, const GridSpec& spec = {});

/// Envelope value at x from the LP over the 2^n box vertices. Multilinear only, n <= 4.
double sampled_hull_envelope(const Monomial& m, const Domain& box, std::span<const double> x, Side side);

/// d_beta + min_{x in dom} (x^alpha - beta^T x) by grid, refinement and vertex enumeration. n <= 6.
double sigma_numeric(const Monomial& m, const Domain& dom, std::span<const double> beta, const GridSpec& spec = {});

/// Error of {(x,w): cvx_B(x) <= w <= min_j x_j} where cvx_B = max{0, max_B sigma + beta^T(x - 1)}.
/// The bound compared against is c1(d).
ErrorReport relaxation_error_pb(const Monomial& m, std::span<const BetaSigma> family, const Domain& dom,
                                const GridSpec& spec = {}, double tol = tolerance::oracle);

/// max |w - x_1...x_n| over the parity facet system, compared to symbox_error(n).
ErrorReport symbox_hull_error(int n, const GridSpec& spec = {}, double tol = 1e-3);

}  // namespace monoconv
