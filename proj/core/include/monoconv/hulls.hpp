#pragma once

#include "monoconv/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monoconv {

enum class FacetSense { ge, le };

std::string_view to_string(FacetSense s) noexcept;

/// sum_{i in I} z_i - sum_{i not in I} z_i (sense) rhs over z = (x, w) in R^{n+1}.
/// Bit j of mask is coordinate j; bit n is w.
struct SignedSubsetInequality {
    std::uint64_t mask = 0;
    FacetSense sense = FacetSense::ge;
    double rhs = 0.0;

    double lhs(std::span<const double> x, double w) const;
    /// Signed slack: >= 0 when satisfied.
    double slack(std::span<const double> x, double w) const;

    bool operator==(const SignedSubsetInequality&) const = default;
};

/// Parity cuts of conv(graph x_1...x_n) over [-1,1]^n together with the box [-1,1]^{n+1}.
struct FacetSystem {
    int n = 0;
    std::vector<SignedSubsetInequality> facets;

    bool operator==(const FacetSystem&) const = default;
};

/// One no-good per odd subset of {1..n+1}: 2^n inequalities. Refuses n > 20.
FacetSystem build_symbox_hull(int n);

/// A facet regrouped as a bound on w: w >= -(n-1) - s_J (lower) or w <= (n-1) - s_J (upper),
/// with s_J = sum_{J} x - sum_{not J} x over J subset of {1..n}.
struct WBound {
    std::uint64_t subset = 0;
    bool upper = false;
    double value(std::span<const double> x, int n) const;
};

std::vector<WBound> regroup_by_w(const FacetSystem& fs);

struct Membership {
    bool member = true;
    bool in_box = true;
    std::vector<std::size_t> violated;  ///< indices into fs.facets
};

Membership hull_membership(const FacetSystem& fs, std::span<const double> x, double w, double tol = 1e-9);

/// [max lower bound, min upper bound] on w at x implied by the facets and |w| <= 1.
std::pair<double, double> w_range(const FacetSystem& fs, std::span<const double> x);
/// Same from bounds already regrouped by regroup_by_w.
std::pair<double, double> w_range(std::span<const WBound> bounds, int n, std::span<const double> x);

struct LinearOptimum {
    Point z;
    double value = 0.0;
    int which_case = 0;  ///< 1, 2 or 3 for the constructive optimum, 0 for the LP
};

/// Maximizer of c^T z over the system built from the sign pattern of c.
LinearOptimum constructive_optimum(std::span<const double> c);

/// Same maximum computed by the dense simplex over the facet rows.
LinearOptimum lp_optimum(const FacetSystem& fs, std::span<const double> c);

struct IntegralityReport {
    int n = 0;
    int trials = 0;
    int agreements = 0;
    int integral_even = 0;
    double max_abs_diff = 0.0;
    int case_counts[3] = {0, 0, 0};
    bool pass() const noexcept { return trials > 0 && agreements == trials && integral_even == trials; }
};

/// Random objectives with trial k drawn from a generator seeded by (seed, k). Refuses n > 6.
IntegralityReport verify_integrality(int n, int trials, std::uint64_t seed, double tol = 1e-9);

/// Text export: a header line, then `I={1,2} sense=GE rhs=-1` per facet (1-based; w is n+1).
void write_facets_text(std::ostream& os, const FacetSystem& fs);
/// CSV export with header `mask,sense,rhs`.
void write_facets_csv(std::ostream& os, const FacetSystem& fs);

FacetSystem parse_facets_text(std::string_view text);
/// n is read from the rhs of the no-good rows when not given.
FacetSystem parse_facets_csv(std::string_view text, int n = 0);

}  // namespace monoconv
