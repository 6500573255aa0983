#include "monoconv/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <numeric>
#include <sstream>

namespace monoconv {

Monomial::Monomial(std::vector<int> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.empty())
        throw InvalidArgument("monomial needs at least one variable");
    for (int a : alpha_)
        if (a < 1)
            throw InvalidArgument("monomial exponents must be integers >= 1");
    degree_ = std::accumulate(alpha_.begin(), alpha_.end(), 0);
}

Monomial Monomial::multilinear(int n) {
    if (n < 1)
        throw InvalidArgument("dimension must be >= 1");
    return Monomial(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Monomial Monomial::symmetric(int n, int alpha0) {
    if (n < 1)
        throw InvalidArgument("dimension must be >= 1");
    return Monomial(std::vector<int>(static_cast<std::size_t>(n), alpha0));
}

Monomial Monomial::parse(std::string_view text) {
    std::vector<int> alpha;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
            throw InvalidArgument("exponent '" + std::string(tok) + "' is not an integer");
        alpha.push_back(value);
        pos = comma + 1;
    }
    return Monomial(std::move(alpha));
}

bool Monomial::is_multilinear() const noexcept {
    return std::all_of(alpha_.begin(), alpha_.end(), [](int a) { return a == 1; });
}

bool Monomial::is_symmetric() const noexcept {
    return std::all_of(alpha_.begin(), alpha_.end(), [&](int a) { return a == alpha_.front(); });
}

void Monomial::require_error_degree() const {
    if (degree_ < 2)
        throw InvalidArgument("error formulas need degree >= 2, got " + std::to_string(degree_));
}

double int_pow(double base, int e) noexcept {
    bool negative = base < 0.0 && (e % 2 == 1);
    double b = std::fabs(base);
    double result = 1.0;
    while (e > 0) {
        if (e & 1)
            result *= b;
        b *= b;
        e >>= 1;
    }
    return negative ? -result : result;
}

double eval_monomial(const Monomial& m, std::span<const double> x) {
    if (static_cast<int>(x.size()) != m.dim())
        throw InvalidArgument("point dimension does not match monomial");
    double v = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        v *= int_pow(x[j], m[j]);
    return v;
}

double scale_error(double err, std::span<const double> c, const Monomial& m) {
    if (static_cast<int>(c.size()) != m.dim())
        throw InvalidArgument("scaling vector dimension does not match monomial");
    for (double cj : c)
        if (cj == 0.0)
            throw InvalidArgument("scaling vector has a zero entry");
    return std::fabs(eval_monomial(m, c)) * err;
}

std::pair<Point, double> scale_point(std::span<const double> x, double w, std::span<const double> c,
                                     const Monomial& m) {
    if (x.size() != c.size())
        throw InvalidArgument("scaling vector dimension does not match point");
    double factor = eval_monomial(m, c);
    if (factor == 0.0)
        throw InvalidArgument("scaling vector has a zero entry");
    Point y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        y[j] = c[j] * x[j];
    return {std::move(y), factor * w};
}

namespace {

void require_dim(int n) {
    if (n < 1)
        throw InvalidArgument("domain dimension must be >= 1");
}

HalfSpace coordinate_row(int n, int j, double sign, double b) {
    Point a(static_cast<std::size_t>(n), 0.0);
    a[static_cast<std::size_t>(j)] = sign;
    return {std::move(a), b};
}

void add_box_rows(std::vector<HalfSpace>& rows, const Point& lo, const Point& hi) {
    int n = static_cast<int>(lo.size());
    for (int j = 0; j < n; ++j) {
        rows.push_back(coordinate_row(n, j, -1.0, -lo[static_cast<std::size_t>(j)]));
        rows.push_back(coordinate_row(n, j, 1.0, hi[static_cast<std::size_t>(j)]));
    }
}

std::vector<Point> box_vertices(const Point& lo, const Point& hi) {
    std::size_t n = lo.size();
    if (n > 20)
        throw ScaleExceeded("box vertex enumeration refused for n > 20");
    std::vector<Point> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Point v(n);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = (mask >> j) & 1U ? hi[j] : lo[j];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Domain::Domain(Family family) : family_(std::move(family)) {
    std::visit(
        [this](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, UnitBox>) {
                require_dim(f.n);
                n_ = f.n;
                lower_.assign(static_cast<std::size_t>(n_), 0.0);
                upper_.assign(static_cast<std::size_t>(n_), 1.0);
                add_box_rows(rows_, lower_, upper_);
            } else if constexpr (std::is_same_v<T, SubBox>) {
                if (f.lower.empty() || f.lower.size() != f.upper.size())
                    throw InvalidArgument("sub-box bounds must be non-empty and of equal length");
                for (std::size_t j = 0; j < f.lower.size(); ++j)
                    if (!(0.0 <= f.lower[j] && f.lower[j] <= f.upper[j] && f.upper[j] <= 1.0))
                        throw InvalidArgument("sub-box needs 0 <= lower <= upper <= 1");
                n_ = static_cast<int>(f.lower.size());
                lower_ = f.lower;
                upper_ = f.upper;
                add_box_rows(rows_, lower_, upper_);
            } else if constexpr (std::is_same_v<T, RatioBox>) {
                require_dim(f.n);
                if (!(f.r > 1.0))
                    throw InvalidArgument("ratio box needs r > 1");
                n_ = f.n;
                lower_.assign(static_cast<std::size_t>(n_), 1.0);
                upper_.assign(static_cast<std::size_t>(n_), f.r);
                add_box_rows(rows_, lower_, upper_);
            } else if constexpr (std::is_same_v<T, SymBox>) {
                require_dim(f.n);
                n_ = f.n;
                lower_.assign(static_cast<std::size_t>(n_), -1.0);
                upper_.assign(static_cast<std::size_t>(n_), 1.0);
                add_box_rows(rows_, lower_, upper_);
            } else if constexpr (std::is_same_v<T, StdSimplex>) {
                require_dim(f.n);
                n_ = f.n;
                lower_.assign(static_cast<std::size_t>(n_), 0.0);
                upper_.assign(static_cast<std::size_t>(n_), 1.0);
                for (int j = 0; j < n_; ++j)
                    rows_.push_back(coordinate_row(n_, j, -1.0, 0.0));
                rows_.push_back({Point(static_cast<std::size_t>(n_), 1.0), 1.0});
            } else if constexpr (std::is_same_v<T, CornerSimplexOne>) {
                if (f.lambda.empty())
                    throw InvalidArgument("corner simplex needs a non-empty lambda");
                for (double l : f.lambda)
                    if (!(l > 0.0 && l <= 1.0))
                        throw InvalidArgument("corner simplex needs 0 < lambda_j <= 1");
                n_ = static_cast<int>(f.lambda.size());
                lower_.resize(static_cast<std::size_t>(n_));
                upper_.assign(static_cast<std::size_t>(n_), 1.0);
                Point a(static_cast<std::size_t>(n_));
                double rhs = 1.0;
                for (std::size_t j = 0; j < f.lambda.size(); ++j) {
                    lower_[j] = 1.0 - f.lambda[j];
                    a[j] = -1.0 / f.lambda[j];
                    rhs -= 1.0 / f.lambda[j];
                    rows_.push_back(coordinate_row(n_, static_cast<int>(j), 1.0, 1.0));
                }
                // sum x_j / lambda_j >= sum 1/lambda_j - 1
                rows_.push_back({std::move(a), rhs});
            } else if constexpr (std::is_same_v<T, ComplementSimplex>) {
                require_dim(f.n);
                n_ = f.n;
                lower_.assign(static_cast<std::size_t>(n_), 0.0);
                upper_.assign(static_cast<std::size_t>(n_), n_ == 1 ? 0.0 : 1.0);
                add_box_rows(rows_, lower_, upper_);
                rows_.push_back({Point(static_cast<std::size_t>(n_), 1.0), static_cast<double>(n_ - 1)});
            }
        },
        family_);
}

DomainKind Domain::kind() const noexcept {
    return static_cast<DomainKind>(family_.index());
}

std::string Domain::name() const {
    switch (kind()) {
    case DomainKind::unit_box: return "unit box [0,1]^" + std::to_string(n_);
    case DomainKind::sub_box: return "sub-box of [0,1]^" + std::to_string(n_);
    case DomainKind::ratio_box: {
        std::ostringstream os;
        os << "ratio box [1," << std::get<RatioBox>(family_).r << "]^" << n_;
        return os.str();
    }
    case DomainKind::sym_box: return "symmetric box [-1,1]^" + std::to_string(n_);
    case DomainKind::std_simplex: return "standard simplex of dimension " + std::to_string(n_);
    case DomainKind::corner_simplex_one: return "simplex cornered at 1, dimension " + std::to_string(n_);
    case DomainKind::complement_simplex: return "complement simplex {x in [0,1]^n, sum x <= n-1}, n=" + std::to_string(n_);
    }
    return "domain";
}

bool Domain::is_box() const noexcept {
    auto k = kind();
    return k == DomainKind::unit_box || k == DomainKind::sub_box || k == DomainKind::ratio_box ||
           k == DomainKind::sym_box;
}

bool Domain::in_unit_cube() const noexcept {
    auto k = kind();
    return k != DomainKind::ratio_box && k != DomainKind::sym_box;
}

bool Domain::contains(std::span<const double> x, double tol) const {
    if (static_cast<int>(x.size()) != n_)
        throw InvalidArgument("point dimension does not match domain");
    for (const auto& row : rows_) {
        double s = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            s += row.a[j] * x[j];
        if (s > row.b + tol)
            return false;
    }
    return true;
}

std::pair<double, double> Domain::projection(int j) const {
    if (j < 0 || j >= n_)
        throw InvalidArgument("coordinate index out of range");
    return {lower_[static_cast<std::size_t>(j)], upper_[static_cast<std::size_t>(j)]};
}

std::pair<double, double> Domain::line_range(std::span<const double> x, std::span<const double> d) const {
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    for (const auto& row : rows_) {
        double ax = 0.0;
        double ad = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            ax += row.a[j] * x[j];
            ad += row.a[j] * d[j];
        }
        double slack = std::max(0.0, row.b - ax);
        if (ad > 1e-15)
            t1 = std::min(t1, slack / ad);
        else if (ad < -1e-15)
            t0 = std::max(t0, slack / ad);
    }
    return {t0, t1};
}

std::vector<Point> Domain::vertices() const {
    std::size_t n = static_cast<std::size_t>(n_);
    switch (kind()) {
    case DomainKind::unit_box:
    case DomainKind::sub_box:
    case DomainKind::ratio_box:
    case DomainKind::sym_box: return box_vertices(lower_, upper_);
    case DomainKind::std_simplex: {
        std::vector<Point> out{Point(n, 0.0)};
        for (std::size_t j = 0; j < n; ++j) {
            Point v(n, 0.0);
            v[j] = 1.0;
            out.push_back(std::move(v));
        }
        return out;
    }
    case DomainKind::corner_simplex_one: {
        const auto& lambda = std::get<CornerSimplexOne>(family_).lambda;
        std::vector<Point> out{Point(n, 1.0)};
        for (std::size_t j = 0; j < n; ++j) {
            Point v(n, 1.0);
            v[j] = 1.0 - lambda[j];
            out.push_back(std::move(v));
        }
        return out;
    }
    case DomainKind::complement_simplex: {
        auto all = box_vertices(Point(n, 0.0), Point(n, 1.0));
        all.pop_back();  // the all-ones vertex is the last mask
        return all;
    }
    }
    return {};
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::tight: return "TIGHT";
    case Verdict::valid_upper: return "VALID_UPPER";
    case Verdict::violated: return "VIOLATED";
    }
    return "?";
}

ErrorReport make_report(double bound, double measured, std::vector<Point> attainment, double tol) {
    ErrorReport r;
    r.bound_value = bound;
    r.measured_value = measured;
    r.attainment_points = std::move(attainment);
    r.abs_gap = std::fabs(measured - bound);
    if (measured > bound + tol)
        r.verdict = Verdict::violated;
    else if (r.abs_gap <= tol)
        r.verdict = Verdict::tight;
    else
        r.verdict = Verdict::valid_upper;
    return r;
}

}  // namespace monoconv
