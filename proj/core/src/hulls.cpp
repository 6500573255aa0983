#include "monoconv/hulls.hpp"

#include "monoconv/lp.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <locale>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace monoconv {
namespace {

constexpr int kFacetLimit = 20;
constexpr int kIntegralityLimit = 6;

double signed_sum(std::uint64_t mask, std::span<const double> z) {
    double in = 0.0, all = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        all += z[j];
        if (mask >> j & 1U)
            in += z[j];
    }
    return 2.0 * in - all;
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return std::string(s.substr(a, b - a));
}

FacetSense parse_sense(const std::string& s) {
    if (s == "GE")
        return FacetSense::ge;
    if (s == "LE")
        return FacetSense::le;
    throw InvalidArgument("unknown facet sense '" + s + "'");
}

double parse_double(const std::string& s) {
    std::istringstream is(s);
    is.imbue(std::locale::classic());
    double v = 0.0;
    if (!(is >> v) || !(is >> std::ws).eof())
        throw InvalidArgument("bad number '" + s + "'");
    return v;
}

}  // namespace

std::string_view to_string(FacetSense s) noexcept { return s == FacetSense::ge ? "GE" : "LE"; }

double SignedSubsetInequality::lhs(std::span<const double> x, double w) const {
    double in = 0.0, all = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        all += x[j];
        if (mask >> j & 1U)
            in += x[j];
    }
    all += w;
    if (mask >> x.size() & 1U)
        in += w;
    return 2.0 * in - all;
}

double SignedSubsetInequality::slack(std::span<const double> x, double w) const {
    const double v = lhs(x, w);
    return sense == FacetSense::ge ? v - rhs : rhs - v;
}

FacetSystem build_symbox_hull(int n) {
    if (n < 1)
        throw InvalidArgument("dimension must be >= 1");
    if (n > kFacetLimit)
        throw ScaleExceeded("facet enumeration refuses n > 20; use the closed-form envelopes");
    FacetSystem fs;
    fs.n = n;
    const std::uint64_t count = std::uint64_t{1} << (n + 1);
    fs.facets.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < count; ++mask)
        if (std::popcount(mask) % 2 == 1)
            fs.facets.push_back({mask, FacetSense::ge, -(n - 1.0)});
    return fs;
}

double WBound::value(std::span<const double> x, int n) const {
    const double s = signed_sum(subset, x);
    return upper ? (n - 1) - s : -(n - 1) - s;
}

std::vector<WBound> regroup_by_w(const FacetSystem& fs) {
    const int n = fs.n;
    const std::uint64_t wbit = std::uint64_t{1} << n;
    const std::uint64_t all = wbit - 1;
    std::vector<WBound> out;
    out.reserve(fs.facets.size());
    for (const auto& f : fs.facets) {
        if (f.sense != FacetSense::ge || f.rhs != -(n - 1.0))
            throw InvalidArgument("regrouping expects the no-good rows");
        if (f.mask & wbit)
            out.push_back({f.mask & all, false});
        else
            out.push_back({all & ~f.mask, true});
    }
    return out;
}

Membership hull_membership(const FacetSystem& fs, std::span<const double> x, double w, double tol) {
    if (static_cast<int>(x.size()) != fs.n)
        throw InvalidArgument("point dimension does not match the facet system");
    Membership out;
    for (double v : x)
        out.in_box = out.in_box && v >= -1.0 - tol && v <= 1.0 + tol;
    out.in_box = out.in_box && w >= -1.0 - tol && w <= 1.0 + tol;
    for (std::size_t k = 0; k < fs.facets.size(); ++k)
        if (fs.facets[k].slack(x, w) < -tol)
            out.violated.push_back(k);
    out.member = out.in_box && out.violated.empty();
    return out;
}

std::pair<double, double> w_range(const FacetSystem& fs, std::span<const double> x) {
    if (static_cast<int>(x.size()) != fs.n)
        throw InvalidArgument("point dimension does not match the facet system");
    return w_range(regroup_by_w(fs), fs.n, x);
}

std::pair<double, double> w_range(std::span<const WBound> bounds, int n, std::span<const double> x) {
    double lo = -1.0, hi = 1.0;
    for (const WBound& b : bounds) {
        const double v = b.value(x, n);
        if (b.upper)
            hi = std::min(hi, v);
        else
            lo = std::max(lo, v);
    }
    return {lo, hi};
}

LinearOptimum constructive_optimum(std::span<const double> c) {
    if (c.empty())
        throw InvalidArgument("objective must be nonempty");
    LinearOptimum out;
    out.z.assign(c.size(), 1.0);
    std::size_t negatives = 0;
    std::size_t first_zero = c.size();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0.0) {
            out.z[i] = -1.0;
            ++negatives;
        } else if (c[i] == 0.0 && first_zero == c.size()) {
            first_zero = i;
        }
    }
    if (negatives % 2 == 0) {
        out.which_case = 1;
    } else if (first_zero != c.size()) {
        out.z[first_zero] = -1.0;
        out.which_case = 2;
    } else {
        std::size_t j1 = 0;
        for (std::size_t i = 1; i < c.size(); ++i)
            if (std::fabs(c[i]) < std::fabs(c[j1]))
                j1 = i;
        out.z[j1] = -out.z[j1];
        out.which_case = 3;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        out.value += c[i] * out.z[i];
    return out;
}

LinearOptimum lp_optimum(const FacetSystem& fs, std::span<const double> c) {
    const std::size_t dim = static_cast<std::size_t>(fs.n) + 1;
    if (c.size() != dim)
        throw InvalidArgument("objective must have n+1 entries");
    // Shift y = z + 1 so that the variables are nonnegative.
    LinearProgram lp;
    lp.c.assign(c.begin(), c.end());
    lp.maximize = true;
    for (std::size_t j = 0; j < dim; ++j) {
        Point row(dim, 0.0);
        row[j] = 1.0;
        lp.add_row(std::move(row), RowSense::le, 2.0);
    }
    for (const auto& f : fs.facets) {
        Point row(dim);
        double shift = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            row[j] = (f.mask >> j & 1U) ? 1.0 : -1.0;
            shift += row[j];
        }
        lp.add_row(std::move(row), f.sense == FacetSense::ge ? RowSense::ge : RowSense::le, f.rhs + shift);
    }
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal)
        throw Error("facet LP did not reach an optimum");
    LinearOptimum out;
    out.z.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        out.z[j] = res.x[j] - 1.0;
        out.value += c[j] * out.z[j];
    }
    return out;
}

IntegralityReport verify_integrality(int n, int trials, std::uint64_t seed, double tol) {
    if (n < 1)
        throw InvalidArgument("dimension must be >= 1");
    if (n > kIntegralityLimit)
        throw ScaleExceeded("integrality verification refuses n > 6");
    if (trials < 1)
        throw InvalidArgument("trials must be >= 1");
    const FacetSystem fs = build_symbox_hull(n);
    IntegralityReport rep;
    rep.n = n;
    rep.trials = trials;
    for (int k = 0; k < trials; ++k) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(k)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        std::uniform_int_distribution<int> pick(0, 5);
        Point c(static_cast<std::size_t>(n) + 1);
        for (double& v : c)
            v = pick(rng) == 0 ? 0.0 : coef(rng);
        const LinearOptimum a = constructive_optimum(c);
        const LinearOptimum b = lp_optimum(fs, c);
        const double diff = std::fabs(a.value - b.value);
        rep.max_abs_diff = std::max(rep.max_abs_diff, diff);
        if (diff <= tol)
            ++rep.agreements;
        int minus = 0;
        bool pm1 = true;
        for (double v : a.z) {
            pm1 = pm1 && (v == 1.0 || v == -1.0);
            minus += v == -1.0;
        }
        if (pm1 && minus % 2 == 0 && hull_membership(fs, std::span(a.z).first(static_cast<std::size_t>(n)), a.z.back()).member)
            ++rep.integral_even;
        ++rep.case_counts[a.which_case - 1];
    }
    return rep;
}

void write_facets_text(std::ostream& os, const FacetSystem& fs) {
    os << "# n=" << fs.n << " facets=" << fs.facets.size() << " coordinate " << fs.n + 1 << " is w\n";
    for (const auto& f : fs.facets) {
        os << "I={";
        bool first = true;
        for (int j = 0; j <= fs.n; ++j) {
            if (f.mask >> j & 1U) {
                os << (first ? "" : ",") << j + 1;
                first = false;
            }
        }
        os << "} sense=" << to_string(f.sense) << " rhs=" << f.rhs << '\n';
    }
}

void write_facets_csv(std::ostream& os, const FacetSystem& fs) {
    os << "mask,sense,rhs\n";
    for (const auto& f : fs.facets)
        os << f.mask << ',' << to_string(f.sense) << ',' << f.rhs << '\n';
}

FacetSystem parse_facets_text(std::string_view text) {
    FacetSystem fs;
    fs.n = -1;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty())
            continue;
        if (line[0] == '#') {
            auto p = line.find("n=");
            if (p != std::string::npos)
                fs.n = std::stoi(line.substr(p + 2));
            continue;
        }
        if (line.rfind("I={", 0) != 0)
            throw InvalidArgument("facet line must start with I={: " + line);
        const auto close = line.find('}');
        if (close == std::string::npos)
            throw InvalidArgument("unterminated subset: " + line);
        SignedSubsetInequality f;
        std::istringstream ids(line.substr(3, close - 3));
        std::string tok;
        while (std::getline(ids, tok, ',')) {
            tok = trim(tok);
            if (tok.empty())
                continue;
            const int j = std::stoi(tok);
            if (j < 1 || j > 64)
                throw InvalidArgument("facet index out of range: " + tok);
            f.mask |= std::uint64_t{1} << (j - 1);
        }
        std::istringstream rest(line.substr(close + 1));
        std::string field;
        bool have_sense = false, have_rhs = false;
        while (rest >> field) {
            if (field.rfind("sense=", 0) == 0) {
                f.sense = parse_sense(field.substr(6));
                have_sense = true;
            } else if (field.rfind("rhs=", 0) == 0) {
                f.rhs = parse_double(field.substr(4));
                have_rhs = true;
            } else {
                throw InvalidArgument("unknown facet field: " + field);
            }
        }
        if (!have_sense || !have_rhs)
            throw InvalidArgument("facet line needs sense= and rhs=: " + line);
        fs.facets.push_back(f);
    }
    if (fs.n < 0) {
        if (fs.facets.empty())
            throw InvalidArgument("empty facet file");
        fs.n = static_cast<int>(std::lround(1.0 - fs.facets.front().rhs));
    }
    for (const auto& f : fs.facets)
        if (fs.n < 64 && (f.mask >> (fs.n + 1)) != 0)
            throw InvalidArgument("facet subset exceeds n+1 coordinates");
    return fs;
}

FacetSystem parse_facets_csv(std::string_view text, int n) {
    FacetSystem fs;
    std::istringstream is{std::string(text)};
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty())
            continue;
        if (header) {
            if (line != "mask,sense,rhs")
                throw InvalidArgument("facet CSV header must be mask,sense,rhs");
            header = false;
            continue;
        }
        std::istringstream row(line);
        std::string m, s, r;
        if (!std::getline(row, m, ',') || !std::getline(row, s, ',') || !std::getline(row, r))
            throw InvalidArgument("facet CSV row needs three fields: " + line);
        SignedSubsetInequality f;
        f.mask = std::stoull(trim(m));
        f.sense = parse_sense(trim(s));
        f.rhs = parse_double(trim(r));
        fs.facets.push_back(f);
    }
    if (n > 0)
        fs.n = n;
    else if (!fs.facets.empty())
        fs.n = static_cast<int>(std::lround(1.0 - fs.facets.front().rhs));
    else
        throw InvalidArgument("empty facet CSV");
    return fs;
}

}  // namespace monoconv
