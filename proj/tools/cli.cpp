#include "cli.hpp"

#include "monoconv/bounds.hpp"
#include "monoconv/envelopes.hpp"
#include "monoconv/hulls.hpp"
#include "monoconv/oracle.hpp"
#include "monoconv/polyrelax.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <locale>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace monoconv::cli {
namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string point_str(std::span<const double> p) {
    std::string s = "(";
    for (std::size_t j = 0; j < p.size(); ++j)
        s += (j ? "," : "") + num(p[j]);
    return s + ")";
}

std::vector<double> parse_doubles(const std::string& text, const char* what) {
    std::vector<double> out;
    std::istringstream is(text);
    is.imbue(std::locale::classic());
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::istringstream ts(tok);
        ts.imbue(std::locale::classic());
        double v = 0.0;
        if (!(ts >> v) || !(ts >> std::ws).eof())
            throw InvalidArgument(std::string("bad number in ") + what + ": '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw InvalidArgument(std::string(what) + " is empty");
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

/// Rows printed either as an aligned table or as CSV.
class Report {
public:
    explicit Report(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) {
        row.resize(header_.size());
        rows_.push_back(std::move(row));
    }

    void print(std::ostream& os, const std::string& format) const {
        if (format == "csv") {
            print_csv(os);
            return;
        }
        std::vector<std::size_t> width(header_.size());
        for (std::size_t j = 0; j < header_.size(); ++j) {
            width[j] = header_[j].size();
            for (const auto& r : rows_)
                width[j] = std::max(width[j], r[j].size());
        }
        auto line = [&](const std::vector<std::string>& r) {
            std::string s;
            for (std::size_t j = 0; j < r.size(); ++j) {
                s += r[j];
                if (j + 1 < r.size())
                    s += std::string(width[j] - r[j].size() + 2, ' ');
            }
            os << s << '\n';
        };
        line(header_);
        for (const auto& r : rows_)
            line(r);
    }

private:
    void print_csv(std::ostream& os) const {
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t j = 0; j < r.size(); ++j)
                os << (j ? "," : "") << csv_field(r[j]);
            os << '\n';
        };
        line(header_);
        for (const auto& r : rows_)
            line(r);
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct DomainArgs {
    std::string kind = "unit";
    double r = 2.0;
    std::string lower, upper, lambda;

    void attach(CLI::App* app) {
        app->add_option("--domain", kind, "unit, sub, ratio, sym, simplex, corner or complement")
            ->check(CLI::IsMember({"unit", "sub", "ratio", "sym", "simplex", "corner", "complement"}));
        app->add_option("--r", r, "ratio box upper end");
        app->add_option("--lower", lower, "sub-box lower corner, comma separated");
        app->add_option("--upper", upper, "sub-box upper corner, comma separated");
        app->add_option("--lambda", lambda, "corner simplex edge lengths, comma separated");
    }

    Domain build(int n) const {
        if (kind == "unit")
            return Domain::unit_box(n);
        if (kind == "ratio")
            return Domain::ratio_box(n, r);
        if (kind == "sym")
            return Domain::sym_box(n);
        if (kind == "simplex")
            return Domain::std_simplex(n);
        if (kind == "complement")
            return Domain::complement_simplex(n);
        if (kind == "corner") {
            Point l = lambda.empty() ? Point(static_cast<std::size_t>(n), 1.0) : parse_doubles(lambda, "--lambda");
            return Domain::corner_simplex_one(std::move(l));
        }
        Point lo = lower.empty() ? Point(static_cast<std::size_t>(n), 0.0) : parse_doubles(lower, "--lower");
        Point up = upper.empty() ? Point(static_cast<std::size_t>(n), 1.0) : parse_doubles(upper, "--upper");
        return Domain::sub_box(std::move(lo), std::move(up));
    }
};

Monomial monomial_from(const std::string& alpha, int n) {
    if (!alpha.empty()) {
        Monomial m = Monomial::parse(alpha);
        if (n > 0 && n != m.dim())
            throw InvalidArgument("--n disagrees with the length of --alpha");
        return m;
    }
    if (n < 1)
        throw InvalidArgument("give --alpha or --n");
    return Monomial::multilinear(n);
}

std::ostream& open_out(const std::string& path, std::unique_ptr<std::ofstream>& file, std::ostream& fallback) {
    if (path.empty() || path == "-")
        return fallback;
    file = std::make_unique<std::ofstream>(path);
    if (!*file)
        throw InvalidArgument("cannot open output file " + path);
    file->imbue(std::locale::classic());
    return *file;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string verdict_str(Verdict v) { return std::string(to_string(v)); }

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
    std::string alpha;
    int n = 0;
    DomainArgs dom;
    std::string format = "table";
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
    Report rep({"quantity", "value", "attainment"});
    const int n_hint = a.n;
    if (a.dom.kind == "ratio") {
        const int n = a.alpha.empty() ? n_hint : Monomial::parse(a.alpha).dim();
        const Monomial m = monomial_from(a.alpha, n);
        if (!m.is_multilinear())
            throw Unsupported("ratio-box errors are known for the multilinear monomial only");
        const double r = a.dom.r;
        const RatioConstants k = ratio_box_constants(n, r);
        const double h = r - 1.0;
        const double tD = 1.0 + k.argmax_i * h / n;
        const double tE = std::pow((std::pow(r, n) - 1.0) / (n * h), 1.0 / (n - 1));
        rep.add({"D", num(k.D), point_str(Point(static_cast<std::size_t>(n), tD))});
        rep.add({"E", num(k.E), point_str(Point(static_cast<std::size_t>(n), tE))});
        rep.add({"D/E", num(std::exp(static_cast<double>(k.log_D - k.log_E))), ""});
        const RelaxedRatio rel = relaxed_convex_error(n, r);
        rep.add({"relaxed_convex_error", num(rel.error), point_str(Point(static_cast<std::size_t>(n), rel.t))});
        const DBound db = d_bound_cases(n, r);
        rep.add({"D_case_bound", num(db.bound), std::string("case=") + std::string(to_string(db.which)) +
                                                  " t*=" + num(db.t_star) + " t**=" + num(db.t_starstar)});
    } else if (a.dom.kind == "sym") {
        const int n = a.alpha.empty() ? n_hint : Monomial::parse(a.alpha).dim();
        const Monomial m = monomial_from(a.alpha, n);
        if (!m.is_multilinear())
            throw Unsupported("symmetric-box errors are known for the multilinear monomial only");
        Point x(static_cast<std::size_t>(n), (n - 2.0) / n);
        x.push_back(-1.0);
        rep.add({"symbox_error", num(symbox_error(n)), point_str(x) + " and its reflections"});
    } else {
        const Monomial m = monomial_from(a.alpha, n_hint);
        m.require_error_degree();
        const int d = m.degree();
        const auto un = static_cast<std::size_t>(m.dim());
        const Domain dom = a.dom.build(m.dim());
        rep.add({"C1", num(c1(d)), point_str(Point(un, std::pow(static_cast<double>(d), 1.0 / (1.0 - d))))});
        rep.add({"C2", num(c2(d)), m.is_multilinear() ? point_str(Point(un, 1.0 - 1.0 / d)) : ""});
        const Point gamma = gamma_vector(m, dom);
        rep.add({"gamma", point_str(gamma), ""});
        rep.add({"gamma_bound", num(gamma_bound(gamma)), ""});
        if (a.dom.kind == "sub") {
            const double fmin = eval_monomial(m, dom.lower());
            const double fmax = eval_monomial(m, dom.upper());
            const XiBound xb = concave_bound_xi(m, fmin, fmax);
            rep.add({"concave_xi_bound", num(xb.bound), point_str(Point(un, xb.coord))});
        }
        if (a.dom.kind == "simplex") {
            const SimplexBounds sb = simplex_bounds(m);
            Point xc(un);
            for (std::size_t j = 0; j < un; ++j)
                xc[j] = static_cast<double>(m[j]) / d;
            rep.add({"simplex_concave", num(sb.conc), m.is_symmetric() ? point_str(Point(un, 1.0 / m.dim())) : ""});
            rep.add({"simplex_convex", num(sb.cvx), point_str(xc)});
        }
    }
    rep.print(out, a.format);
    return ok;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string which = "all";
    std::string alpha;
    int n = 3;
    double r = 2.0;
    int trials = 1000;
    std::uint64_t seed = 42;
    int grid = 0;
    double tol = -1.0;
    std::string lower, upper;
    std::string format = "table";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    GridSpec spec;
    spec.resolution = a.grid;
    spec.seed = a.seed;
    auto tol_or = [&](double dflt) { return a.tol > 0.0 ? a.tol : dflt; };
    Report rep({"case", "check", "bound", "measured", "verdict"});
    bool all_ok = true;
    auto add_report = [&](const std::string& c, const std::string& check, const ErrorReport& r) {
        rep.add({c, check, num(r.bound_value), num(r.measured_value), verdict_str(r.verdict)});
        all_ok = all_ok && r.verdict != Verdict::violated;
    };
    auto add_pass = [&](const std::string& c, const std::string& check, const std::string& bound,
                        const std::string& measured, bool pass) {
        rep.add({c, check, bound, measured, pass ? "PASS" : "FAIL"});
        all_ok = all_ok && pass;
    };
    const bool every = a.which == "all";

    if (every || a.which == "unitbox") {
        const Monomial m = monomial_from(a.alpha, a.alpha.empty() ? a.n : 0);
        const Domain dom = Domain::unit_box(m.dim());
        const ErrorReport conc = max_gap(m, dom, Estimator::of(EstimatorKind::min_coordinate), Side::over,
                                         c1(m.degree()), spec, tol_or(tolerance::oracle));
        add_report("unitbox", "concave", conc);
        if (m.is_multilinear())
            add_report("unitbox", "convex",
                       max_gap(m, dom, Estimator::of(EstimatorKind::unit_hinge), Side::under, c2(m.degree()), spec,
                               tol_or(tolerance::oracle)));
    }
    if (every || a.which == "ratiobox") {
        const Monomial m = Monomial::multilinear(a.n);
        const Domain dom = Domain::ratio_box(a.n, a.r);
        const RatioConstants k = ratio_box_constants(a.n, a.r);
        add_report("ratiobox", "convex",
                   max_gap(m, dom, Estimator::of(EstimatorKind::ratio_convex), Side::under, k.D, spec, tol_or(1e-3)));
        add_report("ratiobox", "concave",
                   max_gap(m, dom, Estimator::of(EstimatorKind::ratio_concave), Side::over, k.E, spec, tol_or(1e-3)));
    }
    if (every || a.which == "symbox") {
        add_report("symbox", "hull", symbox_hull_error(a.n, spec, tol_or(1e-3)));
        const double bound = symbox_error(a.n);
        double worst = 0.0;
        for (const auto& [x, w] : symbox_attainment_points(a.n))
            worst = std::max(worst, std::fabs(std::fabs(w - eval_monomial(Monomial::multilinear(a.n), x)) - bound));
        add_pass("symbox", "reflections", num(bound), num(bound + worst), worst <= 1e-9);
    }
    if (every || a.which == "simplex") {
        const Monomial m = monomial_from(a.alpha, a.alpha.empty() ? a.n : 0);
        const Domain dom = Domain::std_simplex(m.dim());
        const SimplexBounds sb = simplex_bounds(m);
        add_report("simplex", "concave",
                   max_gap(m, dom, Estimator::of(EstimatorKind::min_coordinate), Side::over, sb.conc, spec,
                           tol_or(tolerance::oracle)));
        add_report("simplex", "convex",
                   max_gap(m, dom, Estimator::of(EstimatorKind::zero), Side::under, sb.cvx, spec, tol_or(tolerance::oracle)));
    }
    if (every || a.which == "gamma") {
        const Monomial m = monomial_from(a.alpha, a.alpha.empty() ? a.n : 0);
        const auto un = static_cast<std::size_t>(m.dim());
        Point lo = a.lower.empty() ? Point(un, 0.0) : parse_doubles(a.lower, "--lower");
        Point up = a.upper.empty() ? Point(un, 1.0) : parse_doubles(a.upper, "--upper");
        const Domain dom = Domain::sub_box(std::move(lo), std::move(up));
        const Point gamma = gamma_vector(m, dom);
        const LinearUnderestimator lg(gamma, 1.0);
        const MaxResult excess = maximize(
            dom, [&](std::span<const double> x) { return lg(x) - eval_monomial(m, x); }, spec);
        add_pass("gamma", "underestimator", "0", num(std::max(0.0, excess.value)), excess.value <= 1e-12);
        add_report("gamma", "convex_gap",
                   max_gap(m, dom, Estimator::affine({lg}), Side::under, gamma_bound(gamma), spec, tol_or(tolerance::oracle)));
    }
    if (every || a.which == "integrality") {
        const int n = every ? std::min(a.n, 6) : a.n;
        const IntegralityReport ir = verify_integrality(n, a.trials, a.seed);
        add_pass("integrality", "n=" + std::to_string(n) + " trials=" + std::to_string(ir.trials), "0",
                 num(ir.max_abs_diff), ir.pass());
    }
    rep.print(out, a.format);
    return all_ok ? ok : verification_failed;
}

// ---------------------------------------------------------------- figure1

struct FigureArgs {
    int n_min = 2;
    int n_max = 100;
    std::string rs = "1.01,1.2,1.5,2,3,5,10";
    std::string out;
    std::string svg;
    std::string format = "csv";
};

struct FigureRow {
    int n;
    double r, D, E, ratio, relaxed;
};

void write_svg(std::ostream& os, const std::vector<FigureRow>& rows, const std::vector<double>& rs, int n_min, int n_max) {
    const int cols = 2;
    const int pw = 360, ph = 240, pad = 40;
    const int panels = static_cast<int>(rs.size());
    const int rows_n = (panels + cols - 1) / cols;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * pw << "\" height=\"" << rows_n * ph
       << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int p = 0; p < panels; ++p) {
        const double r = rs[static_cast<std::size_t>(p)];
        const int ox = (p % cols) * pw, oy = (p / cols) * ph;
        double lo = 1.0, hi = 0.0;
        for (const auto& row : rows)
            if (row.r == r) {
                lo = std::min(lo, row.ratio);
                hi = std::max(hi, row.ratio);
            }
        if (hi <= lo)
            hi = lo + 1e-9;
        const double x0 = ox + pad, x1 = ox + pw - 10, y0 = oy + ph - pad, y1 = oy + 20;
        auto sx = [&](int n) { return n_max > n_min ? x0 + (x1 - x0) * (n - n_min) / (n_max - n_min) : x0; };
        auto sy = [&](double v) { return y0 - (y0 - y1) * (v - lo) / (hi - lo); };
        os << "<g>\n<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y0 - y1
           << "\" fill=\"none\" stroke=\"#888\"/>\n";
        os << "<text x=\"" << x0 << "\" y=\"" << y1 - 6 << "\">D/E, r=" << num(r) << "</text>\n";
        os << "<text x=\"" << x0 << "\" y=\"" << y0 + 14 << "\">n=" << n_min << "</text>\n";
        os << "<text x=\"" << x1 - 40 << "\" y=\"" << y0 + 14 << "\">n=" << n_max << "</text>\n";
        os << "<text x=\"" << ox + 2 << "\" y=\"" << y1 + 10 << "\">" << num(hi) << "</text>\n";
        os << "<text x=\"" << ox + 2 << "\" y=\"" << y0 << "\">" << num(lo) << "</text>\n";
        os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
        for (const auto& row : rows)
            if (row.r == r)
                os << num(sx(row.n)) << ',' << num(sy(row.ratio)) << ' ';
        os << "\"/>\n</g>\n";
    }
    os << "</svg>\n";
}

int cmd_figure1(const FigureArgs& a, std::ostream& out) {
    if (a.n_min < 2 || a.n_max < a.n_min)
        throw InvalidArgument("need 2 <= --n-min <= --n-max");
    const std::vector<double> rs = parse_doubles(a.rs, "--r");
    std::vector<FigureRow> rows;
    for (double r : rs)
        for (int n = a.n_min; n <= a.n_max; ++n) {
            const RatioConstants k = ratio_box_constants(n, r);
            const RelaxedRatio rel = relaxed_convex_error(n, r);
            rows.push_back({n, r, k.D, k.E, static_cast<double>(std::exp(k.log_D - k.log_E)),
                            static_cast<double>(std::exp(rel.log_error - k.log_E))});
        }
    std::unique_ptr<std::ofstream> file;
    std::ostream& os = open_out(a.out, file, out);
    if (a.format == "svg") {
        write_svg(os, rows, rs, a.n_min, a.n_max);
    } else {
        os << "n,r,D,E,ratio,relaxed_ratio\n";
        for (const auto& row : rows)
            os << row.n << ',' << num(row.r) << ',' << num(row.D) << ',' << num(row.E) << ',' << num(row.ratio) << ','
               << num(row.relaxed) << '\n';
    }
    if (!a.svg.empty()) {
        std::unique_ptr<std::ofstream> svg_file;
        write_svg(open_out(a.svg, svg_file, out), rows, rs, a.n_min, a.n_max);
    }
    return ok;
}

// ---------------------------------------------------------------- facets

int cmd_facets(int n, const std::string& format, const std::string& path, std::ostream& out) {
    const FacetSystem fs = build_symbox_hull(n);
    std::unique_ptr<std::ofstream> file;
    std::ostream& os = open_out(path, file, out);
    if (format == "csv")
        write_facets_csv(os, fs);
    else
        write_facets_text(os, fs);
    return ok;
}

// ---------------------------------------------------------------- gap

struct GapArgs {
    std::string path;
    std::string input = "auto";
    bool certify = false;
    int grid = 0;
    std::uint64_t seed = 42;
    std::string format = "table";
};

int cmd_gap(const GapArgs& a, std::ostream& out) {
    const std::string text = read_file(a.path);
    bool json = a.input == "json";
    if (a.input == "auto") {
        const auto first = text.find_first_not_of(" \t\r\n");
        json = first != std::string::npos && text[first] == '{';
    }
    const Polynomial p = json ? Polynomial::parse_json(text) : Polynomial::parse_text(text);
    const GapBound gb = gap_bound(p);
    Report rep({"quantity", "value"});
    rep.add({"n", std::to_string(p.dim())});
    rep.add({"m", std::to_string(p.degree())});
    rep.add({"terms", std::to_string(p.terms().size())});
    rep.add({"lprime", num(lprime(p))});
    rep.add({"tight", num(gb.tight)});
    rep.add({"cheap", num(gb.cheap)});
    rep.add({"sharpened_sum", num(gb.sharpened) + " (per-term sum, sharper than the binomial count)"});
    rep.add({"dklt_threshold", num(dklt_threshold(p.dim(), p.degree()))});
    bool pass = true;
    if (a.certify) {
        GridSpec spec;
        spec.resolution = a.grid;
        spec.seed = a.seed;
        const GapCertificate c = certify_gap_small_instance(p, Domain::unit_box(p.dim()), spec);
        rep.add({"z_star", num(c.z_star)});
        rep.add({"z_mon", num(c.z_mon)});
        rep.add({"measured_gap", num(c.gap)});
        rep.add({"certificate", c.passed ? "PASS" : "FAIL"});
        pass = c.passed;
    }
    rep.print(out, a.format);
    return pass ? ok : verification_failed;
}

// ---------------------------------------------------------------- sigma

int cmd_sigma(const std::string& alpha, const std::string& beta_s, const DomainArgs& da, const GridSpec& spec,
              const std::string& format, std::ostream& out) {
    const Monomial m = Monomial::parse(alpha);
    const Point beta = parse_doubles(beta_s, "--beta");
    const Domain dom = da.build(m.dim());
    const SigmaInterval si = sigma_beta(m, dom, beta);
    Report rep({"quantity", "value"});
    rep.add({"sigma_lower", num(si.lo)});
    rep.add({"sigma_upper", num(si.hi) + (si.hi_open ? " (open)" : "")});
    rep.add({"exact", si.exact() ? "yes" : "no"});
    if (m.dim() <= 6)
        rep.add({"sigma_numeric", num(sigma_numeric(m, dom, beta, spec))});
    rep.print(out, format);
    return ok;
}

// ---------------------------------------------------------------- root

int cmd_root(int l1, double l2, const std::string& format, std::ostream& out) {
    const RootResult rr = find_root_exp1(l1, l2);
    Report rep({"quantity", "value"});
    if (rr.status == RootStatus::no_root) {
        rep.add({"status", "NO_ROOT_IN_(0,1]"});
        rep.add({"min_phi_over_s", num(rr.certificate)});
    } else {
        rep.add({"status", "ROOT"});
        rep.add({"root", num(rr.root)});
        rep.add({"residual", num(rr.residual)});
        rep.add({"lower_bound", num(rr.lower_bound)});
    }
    rep.print(out, format);
    return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Error bounds and brute-force verification for monomial convexification"};
    app.name("monoconv");
    app.require_subcommand(1);

    BoundsArgs bounds;
    auto* s_bounds = app.add_subcommand("bounds", "print the error constants for a monomial and domain");
    s_bounds->add_option("--alpha", bounds.alpha, "exponents, e.g. 2,1,1");
    s_bounds->add_option("--n", bounds.n, "dimension (multilinear monomial when --alpha is absent)");
    bounds.dom.attach(s_bounds);
    s_bounds->add_option("--format", bounds.format)->check(CLI::IsMember({"table", "csv"}));

    VerifyArgs verify;
    auto* s_verify = app.add_subcommand("verify", "compare closed-form bounds with the brute-force oracle");
    s_verify->add_option("--case", verify.which)
        ->check(CLI::IsMember({"all", "unitbox", "ratiobox", "symbox", "simplex", "gamma", "integrality"}));
    s_verify->add_option("--alpha", verify.alpha);
    s_verify->add_option("--n", verify.n);
    s_verify->add_option("--r", verify.r);
    s_verify->add_option("--trials", verify.trials);
    s_verify->add_option("--seed", verify.seed);
    s_verify->add_option("--grid", verify.grid, "grid points per coordinate");
    s_verify->add_option("--tol", verify.tol);
    s_verify->add_option("--lower", verify.lower);
    s_verify->add_option("--upper", verify.upper);
    s_verify->add_option("--format", verify.format)->check(CLI::IsMember({"table", "csv"}));

    FigureArgs fig;
    auto* s_fig = app.add_subcommand("figure1", "D/E comparison over [1,r]^n as CSV or SVG");
    s_fig->add_option("--n-min", fig.n_min);
    s_fig->add_option("--n-max", fig.n_max);
    s_fig->add_option("--r", fig.rs, "comma separated list of r");
    s_fig->add_option("--out", fig.out);
    s_fig->add_option("--svg", fig.svg, "also write an SVG chart here");
    s_fig->add_option("--format", fig.format)->check(CLI::IsMember({"csv", "svg"}));

    int facets_n = 2;
    std::string facets_format = "text", facets_out;
    auto* s_facets = app.add_subcommand("facets", "export the parity facets of the symmetric-box hull");
    s_facets->add_option("--n", facets_n)->required();
    s_facets->add_option("--format", facets_format)->check(CLI::IsMember({"text", "csv"}));
    s_facets->add_option("--out", facets_out);

    GapArgs gap;
    auto* s_gap = app.add_subcommand("gap", "gap bounds for a polynomial file");
    s_gap->add_option("--poly,poly", gap.path, "polynomial file")->required();
    s_gap->add_option("--input", gap.input)->check(CLI::IsMember({"auto", "text", "json"}));
    s_gap->add_flag("--certify", gap.certify, "measure the gap on the unit box");
    s_gap->add_option("--grid", gap.grid);
    s_gap->add_option("--seed", gap.seed);
    s_gap->add_option("--format", gap.format)->check(CLI::IsMember({"table", "csv"}));

    std::string sigma_alpha, sigma_beta_s, sigma_format = "table";
    DomainArgs sigma_dom;
    GridSpec sigma_spec;
    auto* s_sigma = app.add_subcommand("sigma", "best intercept for a linear underestimator");
    s_sigma->add_option("--alpha", sigma_alpha)->required();
    s_sigma->add_option("--beta", sigma_beta_s)->required();
    sigma_dom.attach(s_sigma);
    s_sigma->add_option("--grid", sigma_spec.resolution);
    s_sigma->add_option("--seed", sigma_spec.seed);
    s_sigma->add_option("--format", sigma_format)->check(CLI::IsMember({"table", "csv"}));

    int l1 = 2;
    double l2 = 1.0;
    std::string root_format = "table";
    auto* s_root = app.add_subcommand("root", "root of (1-s)^l1 + l2 s - 1 in (0,1]");
    s_root->add_option("--lambda1", l1)->required();
    s_root->add_option("--lambda2", l2)->required();
    s_root->add_option("--format", root_format)->check(CLI::IsMember({"table", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    try {
        if (*s_bounds)
            return cmd_bounds(bounds, out);
        if (*s_verify)
            return cmd_verify(verify, out);
        if (*s_fig)
            return cmd_figure1(fig, out);
        if (*s_facets)
            return cmd_facets(facets_n, facets_format, facets_out, out);
        if (*s_gap)
            return cmd_gap(gap, out);
        if (*s_sigma)
            return cmd_sigma(sigma_alpha, sigma_beta_s, sigma_dom, sigma_spec, sigma_format, out);
        if (*s_root)
            return cmd_root(l1, l2, root_format, out);
    } catch (const ScaleExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return scale_refused;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace monoconv::cli
