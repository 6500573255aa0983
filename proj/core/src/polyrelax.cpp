#include "monoconv/polyrelax.hpp"

#include "monoconv/bounds.hpp"
#include "monoconv/envelopes.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <locale>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace monoconv {

int Term::degree() const noexcept { return std::accumulate(exponents.begin(), exponents.end(), 0); }

Polynomial::Polynomial(int n, std::vector<Term> terms) : n_(n) {
    if (n < 1)
        throw InvalidArgument("polynomial needs n >= 1");
    std::map<std::vector<int>, double> merged;
    for (auto& t : terms) {
        if (static_cast<int>(t.exponents.size()) != n)
            throw InvalidArgument("term has " + std::to_string(t.exponents.size()) + " exponents, expected " + std::to_string(n));
        for (int e : t.exponents)
            if (e < 0)
                throw InvalidArgument("exponents must be nonnegative");
        if (!std::isfinite(t.coeff))
            throw InvalidArgument("coefficients must be finite");
        merged[t.exponents] += t.coeff;
    }
    for (auto& [e, c] : merged) {
        if (c == 0.0)
            continue;
        terms_.push_back({c, e});
        degree_ = std::max(degree_, terms_.back().degree());
    }
}

Polynomial Polynomial::parse_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    is.imbue(std::locale::classic());
    std::vector<Term> terms;
    int n = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        ls.imbue(std::locale::classic());
        Term t{};
        if (!(ls >> t.coeff))
            throw InvalidArgument("line " + std::to_string(lineno) + ": missing coefficient");
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            int e = 0;
            try {
                e = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw InvalidArgument("line " + std::to_string(lineno) + ": exponent '" + tok + "' is not an integer");
            t.exponents.push_back(e);
        }
        if (n < 0)
            n = static_cast<int>(t.exponents.size());
        else if (static_cast<int>(t.exponents.size()) != n)
            throw InvalidArgument("line " + std::to_string(lineno) + ": inconsistent number of exponents");
        terms.push_back(std::move(t));
    }
    if (terms.empty())
        throw InvalidArgument("polynomial file has no terms");
    return Polynomial(n, std::move(terms));
}

Polynomial Polynomial::parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        const int n = j.at("n").get<int>();
        std::vector<Term> terms;
        for (const auto& t : j.at("terms"))
            terms.push_back({t.at("coeff").get<double>(), t.at("exponents").get<std::vector<int>>()});
        return Polynomial(n, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("bad polynomial JSON: ") + e.what());
    }
}

bool Polynomial::is_multilinear() const noexcept {
    for (const auto& t : terms_)
        for (int e : t.exponents)
            if (e > 1)
                return false;
    return true;
}

double Polynomial::operator()(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_)
        throw InvalidArgument("point has the wrong dimension");
    double v = 0.0;
    for (const auto& t : terms_) {
        double m = t.coeff;
        for (std::size_t j = 0; j < x.size(); ++j)
            m *= int_pow(x[j], t.exponents[j]);
        v += m;
    }
    return v;
}

Polynomial Polynomial::scaled(double t) const {
    std::vector<Term> out = terms_;
    for (auto& term : out)
        term.coeff *= t;
    return Polynomial(n_, std::move(out));
}

double lprime(const Polynomial& p) {
    if (p.terms().empty())
        throw InvalidArgument("empty polynomial");
    double v = 0.0;
    for (const auto& t : p.terms()) {
        const int d = t.degree();
        if (d < 2)
            continue;
        v = std::max(v, t.coeff > 0.0 ? t.coeff * c2(d) : -t.coeff * c1(d));
    }
    return v;
}

double log_binomial(int n, int m) {
    if (n < 0 || m < 0)
        throw InvalidArgument("binomial arguments must be nonnegative");
    return std::lgamma(n + m + 1.0) - std::lgamma(n + 1.0) - std::lgamma(m + 1.0);
}

GapBound gap_bound(const Polynomial& p) {
    const double lp = lprime(p);
    const int m = p.degree();
    if (m < 2)
        throw InvalidArgument("gap bound needs a term of degree >= 2");
    double max_c = 0.0, sharp = 0.0;
    for (const auto& t : p.terms()) {
        const int d = t.degree();
        if (d < 2)
            continue;
        max_c = std::max(max_c, std::fabs(t.coeff));
        sharp += t.coeff > 0.0 ? t.coeff * c2(d) : -t.coeff * c1(d);
    }
    const double lb = log_binomial(p.dim(), m);
    const double binom = std::exp(lb);
    return {lp * binom, max_c * c1(m) * binom, sharp, lb};
}

double dklt_threshold(int n, int m) {
    if (n < 1 || m < 2)
        throw InvalidArgument("threshold needs n >= 1 and m >= 2");
    const double log_c3 = std::lgamma(m + 2.0) - std::lgamma(4.0) - std::lgamma(m - 1.0);
    const double v = log_c3 + m * std::log(static_cast<double>(n)) - std::lgamma(m + 1.0) - std::log(c1(m)) -
                     log_binomial(n, m);
    return std::exp(v);
}

double dklt_threshold_product(int n, int m) {
    if (n < 1 || m < 2)
        throw InvalidArgument("threshold needs n >= 1 and m >= 2");
    double log_prod = 0.0;
    for (int k = 1; k <= m; ++k)
        log_prod += std::log1p(static_cast<double>(k) / n);
    const double log_num = 2.0 * std::log(static_cast<double>(m)) + std::log(m + 1.0);
    const double log_den = std::log(6.0) + std::log(static_cast<double>(m)) / (1.0 - m) + log_prod;
    return std::exp(log_num - log_den);
}

GapCertificate certify_gap_small_instance(const Polynomial& p, const Domain& dom, const GridSpec& spec) {
    if (dom.kind() != DomainKind::unit_box)
        throw Unsupported("certification runs over the unit box only");
    if (dom.dim() != p.dim())
        throw InvalidArgument("domain and polynomial dimensions differ");
    if (!p.is_multilinear())
        throw Unsupported("certification needs a multilinear polynomial");
    if (p.dim() > 4)
        throw ScaleExceeded("certification refuses n > 4");

    // Envelope-substituted objective: positive terms by their convex envelope, negative by the concave one.
    auto relaxed = [&](std::span<const double> x) {
        double v = 0.0;
        for (const auto& t : p.terms()) {
            const int d = t.degree();
            double prod = 1.0, sum = 1.0, mn = 1.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (t.exponents[j] == 0)
                    continue;
                prod *= x[j];
                sum += x[j] - 1.0;
                mn = std::min(mn, x[j]);
            }
            if (d < 2)
                v += t.coeff * prod;
            else if (t.coeff > 0.0)
                v += t.coeff * std::max(0.0, sum);
            else
                v += t.coeff * mn;
        }
        return v;
    };

    GapCertificate out{};
    MaxResult zp = maximize(dom, [&](std::span<const double> x) { return -p(x); }, spec);
    out.z_star = -zp.value;
    out.argmin_p = zp.argmax;
    for (const Point& v : dom.vertices()) {
        const double pv = p(v);
        if (pv < out.z_star) {
            out.z_star = pv;
            out.argmin_p = v;
        }
    }
    MaxResult zm = maximize(dom, [&](std::span<const double> x) { return -relaxed(x); }, spec);
    out.z_mon = -zm.value;
    out.argmin_mon = zm.argmax;
    out.gap = out.z_star - out.z_mon;
    bool any_nonlinear = false;
    for (const auto& t : p.terms())
        any_nonlinear = any_nonlinear || t.degree() >= 2;
    out.bound = any_nonlinear ? gap_bound(p).tight : 0.0;
    out.passed = out.gap >= -1e-9 && out.gap <= out.bound + 1e-9;
    return out;
}

}  // namespace monoconv
