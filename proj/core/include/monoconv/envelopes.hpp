#pragma once

#include "monoconv/core.hpp"

#include <span>
#include <vector>

namespace monoconv {

/// Affine function l(x) = intercept + sum_j beta_j (x_j - 1) with beta >= 1.
class LinearUnderestimator {
public:
    LinearUnderestimator(Point beta, double intercept);

    /// The tangent-at-one family member with intercept 1.
    static LinearUnderestimator exact_at_one(Point beta) { return {std::move(beta), 1.0}; }

    const Point& beta() const noexcept { return beta_; }
    double intercept() const noexcept { return intercept_; }
    int dim() const noexcept { return static_cast<int>(beta_.size()); }
    double degree_beta() const noexcept { return degree_beta_; }

    double operator()(std::span<const double> x) const;

private:
    Point beta_;
    double intercept_;
    double degree_beta_;
};

double underestimator_value(const LinearUnderestimator& u, std::span<const double> x);

/// min_j x_j, the concave envelope of any x^alpha (alpha >= 1) over [0,1]^n.
double concave_env_unitbox(const Monomial& m, std::span<const double> x);

/// max{0, 1 + sum_j (x_j - 1)}.
double convex_env_unitbox_multilinear(int n, std::span<const double> x);

/// Per-coordinate degree surrogate built from the projections [1-s1_i, 1-s2_i] of the domain:
/// gamma_i = (1 - (1 - s2_i)^alpha_i) / s2_i when s2_i > 0, alpha_i otherwise.
/// The affine function 1 + sum gamma_j (x_j - 1) underestimates x^alpha on the domain.
Point gamma_vector(const Monomial& m, const Domain& dom);

/// Same construction from explicit upper projection endpoints 1 - s2_i.
Point gamma_vector(const Monomial& m, std::span<const double> upper_projection);

/// Necessary conditions for 1 + beta^T (x - 1) to underestimate x^alpha on dom.
/// Only necessary: the exact boundary of the valid-beta set is not known in closed form.
struct ValidityConditions {
    std::vector<int> indices;       ///< coordinates i whose edge at 1 meets dom and beta_i <= alpha_i
    std::vector<double> min_beta;   ///< per index, the smallest beta_i not ruled out
    bool satisfied = true;
};

ValidityConditions necessary_validity_conditions(const Monomial& m, const Domain& dom, std::span<const double> beta);

/// Concave envelope of x_1...x_n over [1,r]^n: sorted descending coordinates weighted by
/// r^0, r^1, ..., r^{n-1}, minus sum_{j=1}^{n-1} r^j.
double concave_env_ratiobox(int n, double r, std::span<const double> x);

/// Convex envelope of x_1...x_n over [1,r]^n: max_i r^{i-1} (sum x - (n-i) - r(i-1)).
double convex_env_ratiobox(int n, double r, std::span<const double> x);

struct SymEnvelope {
    double lo;
    double hi;
};

/// Convex and concave envelope of x_1...x_n over [-1,1]^n read off the parity facets.
/// Enumerates the 2^{n-1} subsets per side for n <= 20, uses the sign/magnitude rule above that.
SymEnvelope envelopes_symbox(int n, std::span<const double> x);

/// Direct subset enumeration; refuses n > 20.
SymEnvelope envelopes_symbox_enumerated(int n, std::span<const double> x);

/// Closed form: the binding subset follows the signs of x, with the smallest |x_i| flipped
/// when the parity is wrong.
SymEnvelope envelopes_symbox_closed_form(int n, std::span<const double> x);

}  // namespace monoconv
