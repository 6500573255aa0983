#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace monoconv {

using Point = std::vector<double>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument: violated precondition, dimension mismatch, point outside domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A formula or estimator that has no closed form for the requested domain.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// Request exceeds the enumeration or grid scale the brute-force routines accept.
class ScaleExceeded : public Error {
public:
    using Error::Error;
};

namespace tolerance {
inline constexpr double identity = 1e-9;  // closed-form identities
inline constexpr double oracle = 1e-4;    // oracle vs bound agreement
}  // namespace tolerance

/// x^alpha with integer exponents alpha_j >= 1.
class Monomial {
public:
    explicit Monomial(std::vector<int> alpha);

    static Monomial multilinear(int n);
    static Monomial symmetric(int n, int alpha0);
    /// Parses "1,2,3". Fractional or non-positive exponents are rejected.
    static Monomial parse(std::string_view text);

    int dim() const noexcept { return static_cast<int>(alpha_.size()); }
    int degree() const noexcept { return degree_; }
    const std::vector<int>& exponents() const noexcept { return alpha_; }
    int operator[](std::size_t j) const { return alpha_[j]; }

    bool is_multilinear() const noexcept;
    bool is_symmetric() const noexcept;

    /// Throws InvalidArgument when degree < 2; every error constant needs it.
    void require_error_degree() const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> alpha_;
    int degree_ = 0;
};

/// base^e for integer e >= 0 by repeated squaring, sign handled explicitly.
double int_pow(double base, int e) noexcept;

double eval_monomial(const Monomial& m, std::span<const double> x);

/// |c^alpha| * err. The error of conv(graph) over the box scaled by c.
double scale_error(double err, std::span<const double> c, const Monomial& m);

/// Image of an attainment point (x, w) under the scaling x_j -> c_j x_j, w -> c^alpha w.
std::pair<Point, double> scale_point(std::span<const double> x, double w,
                                     std::span<const double> c, const Monomial& m);

// Structured domain families.
struct UnitBox {
    int n;
};
struct SubBox {
    Point lower;
    Point upper;
};
struct RatioBox {
    int n;
    double r;
};
struct SymBox {
    int n;
};
struct StdSimplex {
    int n;
};
struct CornerSimplexOne {
    Point lambda;
};
struct ComplementSimplex {
    int n;
};

enum class DomainKind { unit_box, sub_box, ratio_box, sym_box, std_simplex, corner_simplex_one, complement_simplex };

/// One row a^T x <= b of a domain's H-representation.
struct HalfSpace {
    Point a;
    double b;
};

/// A compact polyhedral domain from one of the supported families.
///
/// Every family is stored together with its defining inequalities, so
/// membership, bounding boxes and feasible line segments are computed the same
/// way for all of them.
class Domain {
public:
    using Family = std::variant<UnitBox, SubBox, RatioBox, SymBox, StdSimplex, CornerSimplexOne, ComplementSimplex>;

    Domain(Family family);  // NOLINT(google-explicit-constructor)

    static Domain unit_box(int n) { return Domain(UnitBox{n}); }
    static Domain sub_box(Point lower, Point upper) { return Domain(SubBox{std::move(lower), std::move(upper)}); }
    static Domain ratio_box(int n, double r) { return Domain(RatioBox{n, r}); }
    static Domain sym_box(int n) { return Domain(SymBox{n}); }
    static Domain std_simplex(int n) { return Domain(StdSimplex{n}); }
    static Domain corner_simplex_one(Point lambda) { return Domain(CornerSimplexOne{std::move(lambda)}); }
    static Domain complement_simplex(int n) { return Domain(ComplementSimplex{n}); }

    const Family& family() const noexcept { return family_; }
    DomainKind kind() const noexcept;
    std::string name() const;
    int dim() const noexcept { return n_; }

    bool is_box() const noexcept;
    /// True when the domain lies inside [0,1]^n.
    bool in_unit_cube() const noexcept;

    bool contains(std::span<const double> x, double tol = 1e-12) const;

    const Point& lower() const noexcept { return lower_; }
    const Point& upper() const noexcept { return upper_; }
    const std::vector<HalfSpace>& inequalities() const noexcept { return rows_; }

    /// Projection onto coordinate j as [min x_j, max x_j].
    std::pair<double, double> projection(int j) const;

    /// Largest interval [t0, t1] with x + t d feasible, assuming x feasible.
    std::pair<double, double> line_range(std::span<const double> x, std::span<const double> d) const;

    /// Vertex list; every family here is a polytope with an explicit one.
    std::vector<Point> vertices() const;

private:
    Family family_;
    int n_ = 0;
    Point lower_;
    Point upper_;
    std::vector<HalfSpace> rows_;
};

enum class Verdict { tight, valid_upper, violated };

std::string_view to_string(Verdict v) noexcept;

struct ErrorReport {
    double bound_value = 0.0;
    double measured_value = 0.0;
    std::vector<Point> attainment_points;
    double abs_gap = 0.0;
    Verdict verdict = Verdict::valid_upper;
};

/// TIGHT when |measured - bound| <= tol, VIOLATED when measured > bound + tol.
ErrorReport make_report(double bound, double measured, std::vector<Point> attainment, double tol = tolerance::oracle);

}  // namespace monoconv
