#pragma once

#include "monoconv/core.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace monoconv {

/// (1 - 1/d) d^{1/(1-d)}: concave-side error over [0,1]^n.
double c1(int d);
/// (1 - 1/d)^d: convex-side error over [0,1]^n.
double c2(int d);

struct BoundSet {
    double c1;
    double c2;
    int degree;
};

BoundSet bound_set(const Monomial& m);

struct XiBound {
    double bound;
    double xi;     ///< clipped value of x^alpha at the maximizer
    double coord;  ///< xi^{1/d}; the maximizer is coord * 1
};

/// Concave-envelope error over a domain whose f-range is [fmin, fmax].
XiBound concave_bound_xi(const Monomial& m, double fmin, double fmax);

/// (1 - 1/d_g)^{d_g}, d_g = sum gamma.
double gamma_bound(std::span<const double> gamma);

struct PhiBound {
    double bound;
    double xi;
};

/// Lower bound on the error from the diagonal segment [t1 1, t2 1].
PhiBound lower_bound_phi(int d, double t1, double t2);
/// t1^d + (t2^d - t1^d) xi - (t1 + (t2 - t1) xi)^d.
double phi_diagonal(int d, double t1, double t2, double xi);

struct SimplexBounds {
    double conc;
    double cvx;
};

SimplexBounds simplex_bounds(const Monomial& m);

/// Value or enclosure of sigma(beta) = d_beta + min_{x in S} (x^alpha - beta^T x).
struct SigmaInterval {
    double lo;
    double hi;
    bool hi_open = false;
    bool exact() const noexcept { return lo == hi && !hi_open; }
};

SigmaInterval sigma_beta(const Monomial& m, const Domain& dom, std::span<const double> beta);

/// max_j beta_j / kappa_j.
double r_beta_kappa(std::span<const double> beta, std::span<const double> kappa);

/// (1 - sigma/d_beta)^{d_beta / r(beta, kappa)}.
double c_beta_kappa(const Monomial& m, std::span<const double> beta, std::span<const double> kappa, double sigma);

/// d_beta - sigma + t - d_beta t^{r/d_beta}; c_beta_kappa is its fixed point.
double phi_beta_kappa(std::span<const double> beta, std::span<const double> kappa, double sigma, double t);

struct BetaSigma {
    Point beta;
    double sigma;
};

/// Convex-side error bound for the relaxation cut out by the family B of (beta, sigma) pairs.
double errenv_bound(const Monomial& m, std::span<const BetaSigma> family);

/// Candidate maximal elements kappa* that errenv_bound minimizes over.
std::vector<Point> errenv_kappa_candidates(const Monomial& m, std::span<const BetaSigma> family);

struct RatioConstants {
    double D;  ///< convex envelope error over [1,r]^n
    double E;  ///< concave envelope error over [1,r]^n
    long double log_D;
    long double log_E;
    int argmax_i;  ///< i in 1..n-1 maximizing the D enumeration; the argmax is (1 + (i/n)(r-1)) 1
};

RatioConstants ratio_box_constants(int n, double r);

/// log of the error of the convex relaxation that keeps only the i = 1 and i = n pieces.
struct RelaxedRatio {
    double error;
    long double log_error;
    double t;  ///< diagonal coordinate of the maximizer
};

RelaxedRatio relaxed_convex_error(int n, double r);

/// E_{r,n} / (r^n - 1) and D_{r,n} / (r^n - 1) computed without forming r^n.
double e_over_growth(int n, double r);
double d_over_growth(int n, double r);

enum class DCase { exact_first, middle, last };

std::string_view to_string(DCase c) noexcept;

struct DBound {
    double bound;
    DCase which;
    double t_star;       ///< smallest stationary point of psi in (0,1)
    double t_starstar;   ///< numerical global maximizer of psi on [0,1]
};

/// psi(t) = (1 + (r-1)t)^n - r^{nt}.
double psi(int n, double r, double t);
double psi_prime(int n, double r, double t);

DBound d_bound_cases(int n, double r);

/// 1 + ((n-2)/n)^n.
double symbox_error(int n);

/// The 2^n reflections of (((n-2)/n) 1, -1), each as (x, w).
std::vector<std::pair<Point, double>> symbox_attainment_points(int n);

enum class RootStatus { root, no_root };

struct RootResult {
    RootStatus status;
    double root = 0.0;         ///< sigma* when status == root
    double residual = 0.0;     ///< |phi(sigma*)|
    double lower_bound = 0.0;  ///< 1 - (l2/l1)^{1/(l1-1)}
    double certificate = 0.0;  ///< no_root: sampled min of phi(s)/s over (0,1], positive
    int iterations = 0;
};

/// (1 - s)^{l1} + l2 s - 1.
double exp1_phi(int lambda1, double lambda2, double s);

RootResult find_root_exp1(int lambda1, double lambda2);

struct DineqResult {
    bool holds;
    bool second_equal;
    double lhs;  ///< (d-1)^2 ln d
    double mid;  ///< d(d-2) ln d
    double rhs;  ///< (d-1)^2 ln(d-1)
};

DineqResult dineq_check(int d);

}  // namespace monoconv
