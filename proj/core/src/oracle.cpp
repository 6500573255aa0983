#include "monoconv/oracle.hpp"

#include "monoconv/hulls.hpp"
#include "monoconv/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>

namespace monoconv {
namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr std::size_t kVertexScanLimit = 4096;

struct Incumbent {
    double value = -std::numeric_limits<double>::infinity();
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t evaluated = 0;

    void offer(double v, std::uint64_t idx) {
        if (v > value || (v == value && idx < index)) {
            value = v;
            index = idx;
        }
    }
};

class GridWalker {
public:
    GridWalker(const Domain& dom, int res) : lo_(dom.lower()), hi_(dom.upper()) {
        const auto n = lo_.size();
        counts_.resize(n);
        total_ = 1;
        for (std::size_t j = 0; j < n; ++j) {
            counts_[j] = hi_[j] > lo_[j] ? static_cast<std::uint64_t>(res) : 1U;
            total_ *= counts_[j];
        }
    }

    std::uint64_t total() const { return total_; }

    // Coordinate 0 is the most significant digit, so index order is lexicographic.
    void point(std::uint64_t idx, Point& x) const {
        for (std::size_t j = lo_.size(); j-- > 0;) {
            const std::uint64_t k = idx % counts_[j];
            idx /= counts_[j];
            x[j] = lo_[j] + (hi_[j] - lo_[j]) * (static_cast<double>(k) + 0.5) / static_cast<double>(counts_[j]);
        }
    }

    double cell_width() const {
        double w = 0.0;
        for (std::size_t j = 0; j < lo_.size(); ++j)
            w = std::max(w, (hi_[j] - lo_[j]) / static_cast<double>(counts_[j]));
        return w;
    }

private:
    Point lo_, hi_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 1;
};

std::uint64_t checked_grid_size(int n, int res, std::uint64_t cap) {
    long double size = 1.0L;
    for (int j = 0; j < n; ++j)
        size *= res;
    if (size > static_cast<long double>(cap))
        throw ScaleExceeded("grid of " + std::to_string(res) + "^" + std::to_string(n) + " points exceeds the cap");
    return static_cast<std::uint64_t>(size);
}

std::vector<Point> refinement_directions(int n) {
    std::vector<Point> dirs;
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t j = 0; j < un; ++j) {
        Point d(un, 0.0);
        d[j] = 1.0;
        dirs.push_back(std::move(d));
    }
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) {
            Point d(un, 0.0);
            d[i] = 1.0;
            d[j] = -1.0;
            dirs.push_back(d);
            d[j] = 1.0;
            dirs.push_back(std::move(d));
        }
    if (n > 1)
        dirs.emplace_back(un, 1.0);
    return dirs;
}

void clamp_to_box(const Domain& dom, Point& x) {
    for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = std::clamp(x[j], dom.lower()[j], dom.upper()[j]);
}

// Golden-section line search plus both end points; improvements only.
void refine(const Domain& dom, const Objective& g, Point& x, double& v, double radius0, int passes,
            std::uint64_t seed) {
    auto dirs = refinement_directions(dom.dim());
    const std::size_t fixed = dirs.size();
    // Random directions get past ridges where no coordinate-type move improves.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    for (std::size_t k = 0; k < 4 * x.size(); ++k) {
        Point d(x.size());
        for (double& c : d)
            c = normal(rng);
        dirs.push_back(std::move(d));
    }
    Point y(x.size());
    auto at = [&](const Point& d, double t) {
        for (std::size_t j = 0; j < x.size(); ++j)
            y[j] = x[j] + t * d[j];
        clamp_to_box(dom, y);
        if (!dom.contains(y, 1e-12))
            return -std::numeric_limits<double>::infinity();
        return g(y);
    };
    for (int pass = 0; pass < passes; ++pass) {
        double radius = radius0 * std::ldexp(1.0, -pass);
        for (int sweep = 0; sweep < 2000 && radius > 1e-12; ++sweep) {
            const double before = v;
            const Point start = x;
            for (std::size_t k = fixed; k < dirs.size(); ++k)
                for (double& c : dirs[k])
                    c = normal(rng);
            auto search = [&](const Point& d, double reach) {
                auto [t0, t1] = dom.line_range(x, d);
                t0 = std::max(t0, -reach);
                t1 = std::min(t1, reach);
                if (!(t1 - t0 > 1e-15))
                    return;
                double best_t = 0.0, best_v = v;
                for (double t : {t0, t1}) {
                    const double fv = at(d, t);
                    if (fv > best_v) {
                        best_v = fv;
                        best_t = t;
                    }
                }
                double a = t0, b = t1;
                double c = b - kGolden * (b - a), e = a + kGolden * (b - a);
                double fc = at(d, c), fe = at(d, e);
                for (int it = 0; it < 60 && b - a > 1e-14; ++it) {
                    if (fc < fe) {
                        a = c;
                        c = e;
                        fc = fe;
                        e = a + kGolden * (b - a);
                        fe = at(d, e);
                    } else {
                        b = e;
                        e = c;
                        fe = fc;
                        c = b - kGolden * (b - a);
                        fc = at(d, c);
                    }
                }
                const double tm = 0.5 * (a + b);
                const double fm = at(d, tm);
                if (fm > best_v) {
                    best_v = fm;
                    best_t = tm;
                }
                if (best_v > v) {
                    for (std::size_t j = 0; j < x.size(); ++j)
                        x[j] += best_t * d[j];
                    clamp_to_box(dom, x);
                    v = best_v;
                }
            };
            for (const Point& d : dirs)
                search(d, radius);
            // Pattern move along this sweep's net displacement follows ridges.
            Point moved(x.size());
            double len = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                moved[j] = x[j] - start[j];
                len = std::max(len, std::fabs(moved[j]));
            }
            if (len > 0.0) {
                for (double& c : moved)
                    c /= len;
                search(moved, std::max(radius, 4.0 * len));
            }
            // Keep the radius while sweeps still gain, as in a pattern search.
            if (!(v > before + 1e-15))
                radius *= 0.5;
        }
    }
}

double ratio_of(const Domain& dom) {
    return std::get<RatioBox>(dom.family()).r;
}

void require_same_dim(const Monomial& m, const Domain& dom) {
    if (m.dim() != dom.dim())
        throw InvalidArgument("domain and monomial dimensions differ");
}

}  // namespace

int GridSpec::resolution_for(int n) const {
    if (resolution != 0) {
        if (resolution < 2)
            throw InvalidArgument("grid resolution must be >= 2");
        return resolution;
    }
    if (n <= 3)
        return 64;
    if (n == 4)
        return 24;
    if (n == 5)
        return 12;
    if (n == 6)
        return 8;
    return std::max(2, static_cast<int>(std::pow(1e6, 1.0 / n)));
}

int GridSpec::restarts_for(int n) const {
    if (restarts >= 0)
        return restarts;
    return n >= 5 ? 16 : 0;
}

MaxResult maximize(const Domain& dom, const Objective& g, const GridSpec& spec) {
    const int n = dom.dim();
    const int res = spec.resolution_for(n);
    checked_grid_size(n, res, spec.max_points);
    const GridWalker walker(dom, res);
    const std::uint64_t total = walker.total();

    unsigned threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads) : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 4096)));
    std::vector<Incumbent> partial(threads);
    auto scan = [&](unsigned t) {
        const std::uint64_t a = total * t / threads, b = total * (t + 1) / threads;
        Point x(static_cast<std::size_t>(n));
        Incumbent& inc = partial[t];
        for (std::uint64_t idx = a; idx < b; ++idx) {
            walker.point(idx, x);
            if (!dom.contains(x))
                continue;
            inc.offer(g(x), idx);
            ++inc.evaluated;
        }
    };
    if (threads == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(scan, t);
        for (auto& th : pool)
            th.join();
    }
    Incumbent best;
    for (const auto& p : partial) {
        best.offer(p.value, p.index);
        best.evaluated += p.evaluated;
    }

    MaxResult out;
    out.grid = spec;
    out.evaluated = best.evaluated;
    out.argmax.assign(static_cast<std::size_t>(n), 0.0);
    if (best.index != std::numeric_limits<std::uint64_t>::max()) {
        walker.point(best.index, out.argmax);
        out.value = best.value;
    } else {
        out.value = -std::numeric_limits<double>::infinity();
    }

    // Vertices catch maxima on the boundary that cell centres never touch.
    if (!dom.is_box() || n <= 12) {
        const auto verts = dom.vertices();
        if (verts.size() <= kVertexScanLimit) {
            for (const Point& v : verts) {
                const double fv = g(v);
                ++out.evaluated;
                if (fv > out.value) {
                    out.value = fv;
                    out.argmax = v;
                }
            }
        }
    }
    if (!std::isfinite(out.value))
        throw Error("no feasible point found on the grid");
    out.grid_value = out.value;

    refine(dom, g, out.argmax, out.value, 2.0 * walker.cell_width(), std::max(1, spec.refinement), spec.seed);

    const int restarts = spec.restarts_for(n);
    if (restarts > 0) {
        std::mt19937_64 rng(spec.seed);
        double width = 0.0;
        for (int j = 0; j < n; ++j)
            width = std::max(width, dom.upper()[static_cast<std::size_t>(j)] - dom.lower()[static_cast<std::size_t>(j)]);
        for (int k = 0; k < restarts; ++k) {
            Point x(static_cast<std::size_t>(n));
            bool found = false;
            for (int tries = 0; tries < 1000 && !found; ++tries) {
                for (int j = 0; j < n; ++j) {
                    std::uniform_real_distribution<double> u(dom.lower()[static_cast<std::size_t>(j)], dom.upper()[static_cast<std::size_t>(j)]);
                    x[static_cast<std::size_t>(j)] = u(rng);
                }
                found = dom.contains(x);
            }
            if (!found)
                continue;
            double v = g(x);
            refine(dom, g, x, v, 0.25 * width, std::max(1, spec.refinement), spec.seed + 1 + static_cast<std::uint64_t>(k));
            if (v > out.value) {
                out.value = v;
                out.argmax = x;
            }
        }
    }
    return out;
}

double Estimator::operator()(const Monomial& m, const Domain& dom, std::span<const double> x) const {
    switch (kind) {
        case EstimatorKind::min_coordinate:
            return concave_env_unitbox(m, x);
        case EstimatorKind::unit_hinge:
            return convex_env_unitbox_multilinear(m.dim(), x);
        case EstimatorKind::affine_family: {
            double v = 0.0;
            for (const auto& p : pieces)
                v = std::max(v, p(x));
            return v;
        }
        case EstimatorKind::ratio_concave:
            return concave_env_ratiobox(m.dim(), ratio_of(dom), x);
        case EstimatorKind::ratio_convex:
            return convex_env_ratiobox(m.dim(), ratio_of(dom), x);
        case EstimatorKind::sym_upper:
            return envelopes_symbox(m.dim(), x).hi;
        case EstimatorKind::sym_lower:
            return envelopes_symbox(m.dim(), x).lo;
        case EstimatorKind::zero:
            return 0.0;
    }
    return 0.0;
}

Side Estimator::natural_side() const noexcept {
    switch (kind) {
        case EstimatorKind::min_coordinate:
        case EstimatorKind::ratio_concave:
        case EstimatorKind::sym_upper:
            return Side::over;
        default:
            return Side::under;
    }
}

ErrorReport max_gap(const Monomial& m, const Domain& dom, const Estimator& est, Side side, double bound,
                    const GridSpec& spec, double tol) {
    require_same_dim(m, dom);
    if (side != est.natural_side())
        throw Unsupported("estimator is not a valid bound on the requested side");
    switch (est.kind) {
        case EstimatorKind::min_coordinate:
        case EstimatorKind::zero:
        case EstimatorKind::affine_family:
            if (!dom.in_unit_cube())
                throw Unsupported("estimator needs a domain inside [0,1]^n, got " + dom.name());
            break;
        case EstimatorKind::unit_hinge:
            if (!dom.in_unit_cube() || !m.is_multilinear())
                throw Unsupported("the unit-box hinge is the envelope of the multilinear monomial only");
            break;
        case EstimatorKind::ratio_concave:
        case EstimatorKind::ratio_convex:
            if (dom.kind() != DomainKind::ratio_box || !m.is_multilinear())
                throw Unsupported("ratio-box envelopes need the multilinear monomial over [1,r]^n");
            break;
        case EstimatorKind::sym_upper:
        case EstimatorKind::sym_lower:
            if (dom.kind() != DomainKind::sym_box || !m.is_multilinear())
                throw Unsupported("symmetric-box envelopes need the multilinear monomial over [-1,1]^n");
            break;
    }
    if (est.kind == EstimatorKind::affine_family)
        for (const auto& p : est.pieces)
            if (p.dim() != m.dim())
                throw InvalidArgument("affine piece has the wrong dimension");

    const bool over = side == Side::over;
    Objective g = [&](std::span<const double> x) {
        const double e = est(m, dom, x);
        const double f = eval_monomial(m, x);
        return over ? e - f : f - e;
    };
    MaxResult r = maximize(dom, g, spec);
    return make_report(bound, r.value, {r.argmax}, tol);
}

Extremum extremize_f(const Monomial& m, const Domain& dom, Sense sense, const GridSpec& spec) {
    require_same_dim(m, dom);
    const bool maxi = sense == Sense::maximize;
    const auto n = static_cast<std::size_t>(m.dim());
    switch (dom.kind()) {
        case DomainKind::std_simplex: {
            if (!maxi)
                return {0.0, Point(n, 0.0), true};
            Point x(n);
            for (std::size_t j = 0; j < n; ++j)
                x[j] = static_cast<double>(m[j]) / m.degree();
            return {eval_monomial(m, x), x, true};
        }
        case DomainKind::unit_box:
        case DomainKind::sub_box:
        case DomainKind::ratio_box: {
            // Nonnegative box: x^alpha is nondecreasing in every coordinate.
            Point x = maxi ? dom.upper() : dom.lower();
            return {eval_monomial(m, x), x, true};
        }
        case DomainKind::sym_box:
            if (m.is_multilinear() && n <= 20) {
                Point best_x;
                double best = maxi ? -2.0 : 2.0;
                for (const Point& v : dom.vertices()) {
                    const double f = eval_monomial(m, v);
                    if (maxi ? f > best : f < best) {
                        best = f;
                        best_x = v;
                    }
                }
                return {best, best_x, true};
            }
            break;
        default:
            break;
    }
    Objective g = [&](std::span<const double> x) {
        const double f = eval_monomial(m, x);
        return maxi ? f : -f;
    };
    MaxResult r = maximize(dom, g, spec);
    return {maxi ? r.value : -r.value, r.argmax, false};
}

double sampled_hull_envelope(const Monomial& m, const Domain& box, std::span<const double> x, Side side) {
    require_same_dim(m, box);
    if (!m.is_multilinear())
        throw Unsupported("vertex-based envelopes need a multilinear monomial");
    if (!box.is_box())
        throw Unsupported("vertex-based envelopes need a box domain");
    if (m.dim() > 4)
        throw ScaleExceeded("vertex LP envelope refuses n > 4");
    if (static_cast<int>(x.size()) != m.dim() || !box.contains(x, 1e-9))
        throw InvalidArgument("point outside the box");
    const auto verts = box.vertices();
    const auto n = static_cast<std::size_t>(m.dim());
    LinearProgram lp;
    lp.maximize = side == Side::over;
    lp.c.resize(verts.size());
    for (std::size_t k = 0; k < verts.size(); ++k)
        lp.c[k] = eval_monomial(m, verts[k]);
    for (std::size_t j = 0; j < n; ++j) {
        Point row(verts.size());
        for (std::size_t k = 0; k < verts.size(); ++k)
            row[k] = verts[k][j];
        lp.add_row(std::move(row), RowSense::eq, x[j]);
    }
    lp.add_row(Point(verts.size(), 1.0), RowSense::eq, 1.0);
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal)
        throw Error("vertex LP did not reach an optimum");
    return res.value;
}

double sigma_numeric(const Monomial& m, const Domain& dom, std::span<const double> beta, const GridSpec& spec) {
    require_same_dim(m, dom);
    if (m.dim() > 6)
        throw ScaleExceeded("numeric sigma refuses n > 6");
    if (static_cast<int>(beta.size()) != m.dim())
        throw InvalidArgument("beta has the wrong dimension");
    for (double b : beta)
        if (!(b >= 1.0))
            throw InvalidArgument("beta entries must be >= 1");
    const Point bv(beta.begin(), beta.end());
    auto h = [&](std::span<const double> x) {
        double v = eval_monomial(m, x);
        for (std::size_t j = 0; j < bv.size(); ++j)
            v -= bv[j] * x[j];
        return v;
    };
    MaxResult r = maximize(dom, [&](std::span<const double> x) { return -h(x); }, spec);
    double lo = -r.value;
    for (const Point& v : dom.vertices())
        lo = std::min(lo, h(v));
    return std::accumulate(bv.begin(), bv.end(), 0.0) + lo;
}

ErrorReport relaxation_error_pb(const Monomial& m, std::span<const BetaSigma> family, const Domain& dom,
                                const GridSpec& spec, double tol) {
    require_same_dim(m, dom);
    m.require_error_degree();
    if (!dom.in_unit_cube() || !dom.contains(Point(static_cast<std::size_t>(m.dim()), 1.0)))
        throw Unsupported("the relaxation needs a domain inside [0,1]^n containing 1");
    bool has_alpha = false;
    std::vector<LinearUnderestimator> pieces;
    for (const auto& bs : family) {
        pieces.emplace_back(bs.beta, bs.sigma);
        bool eq = static_cast<int>(bs.beta.size()) == m.dim();
        for (std::size_t j = 0; eq && j < bs.beta.size(); ++j)
            eq = bs.beta[j] == m[j];
        has_alpha = has_alpha || eq;
    }
    if (!has_alpha)
        throw InvalidArgument("the family must contain alpha");
    const Estimator under = Estimator::affine(std::move(pieces));
    Objective g = [&](std::span<const double> x) {
        const double f = eval_monomial(m, x);
        return std::max(concave_env_unitbox(m, x) - f, f - under(m, dom, x));
    };
    MaxResult r = maximize(dom, g, spec);
    return make_report(c1(m.degree()), r.value, {r.argmax}, tol);
}

ErrorReport symbox_hull_error(int n, const GridSpec& spec, double tol) {
    const FacetSystem fs = build_symbox_hull(n);
    const std::vector<WBound> bounds = regroup_by_w(fs);
    const Monomial m = Monomial::multilinear(n);
    const Domain dom = Domain::sym_box(n);
    auto gap = [&](std::span<const double> x, double* w) {
        const auto [lo, hi] = w_range(bounds, n, x);
        const double f = eval_monomial(m, x);
        if (w)
            *w = f - lo >= hi - f ? lo : hi;
        return std::max(f - lo, hi - f);
    };
    MaxResult r = maximize(dom, [&](std::span<const double> x) { return gap(x, nullptr); }, spec);
    double w = 0.0;
    gap(r.argmax, &w);
    Point z = r.argmax;
    z.push_back(w);
    return make_report(symbox_error(n), r.value, {z}, tol);
}

}  // namespace monoconv
