#pragma once

#include "monoconv/core.hpp"
#include "monoconv/oracle.hpp"

#include <string_view>
#include <vector>

namespace monoconv {

struct Term {
    double coeff;
    std::vector<int> exponents;  ///< nonnegative; zero entries mean the variable is absent
    int degree() const noexcept;
};

/// Sum of terms with distinct exponent vectors and nonzero coefficients.
class Polynomial {
public:
    Polynomial(int n, std::vector<Term> terms);

    /// Lines `coeff e1 ... en`; blank lines and lines starting with # are skipped.
    static Polynomial parse_text(std::string_view text);
    /// {"n": 3, "terms": [{"coeff": 1.0, "exponents": [1,1,0]}]}
    static Polynomial parse_json(std::string_view text);

    int dim() const noexcept { return n_; }
    int degree() const noexcept { return degree_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_multilinear() const noexcept;

    double operator()(std::span<const double> x) const;
    Polynomial scaled(double t) const;

private:
    int n_;
    int degree_ = 0;
    std::vector<Term> terms_;
};

/// max{c C2_d over c > 0, -c C1_d over c < 0} over terms of degree >= 2.
double lprime(const Polynomial& p);

struct GapBound {
    double tight;       ///< L'(p) C(n+m, n)
    double cheap;       ///< max|c| C1_m C(n+m, n)
    double sharpened;   ///< sum of per-term constants, no binomial factor
    double log_binomial;
};

GapBound gap_bound(const Polynomial& p);

/// log C(n+m, n) through lgamma.
double log_binomial(int n, int m);

/// C(m+1,3) n^m / (m! C1_m C(n+m,n)).
double dklt_threshold(int n, int m);
/// m^2 (m+1) / (6 m^{1/(1-m)} prod_{k=1..m} (1 + k/n)).
double dklt_threshold_product(int n, int m);

struct GapCertificate {
    double z_star;   ///< min p over the box
    double z_mon;    ///< min of the envelope-substituted objective
    double gap;
    double bound;
    Point argmin_p;
    Point argmin_mon;
    bool passed;
};

/// Multilinear p over [0,1]^n with n <= 4.
GapCertificate certify_gap_small_instance(const Polynomial& p, const Domain& dom, const GridSpec& spec = {});

}  // namespace monoconv
