#include "monoconv/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace monoconv {
namespace {

constexpr double kEps = 1e-11;

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : cols_(cols), t_(rows * (cols + 1), 0.0), basis_(rows, 0) {}

    double& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
    double& rhs(std::size_t i) { return at(i, cols_); }
    std::size_t rows() const { return basis_.size(); }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t r, std::size_t c) {
        const double p = at(r, c);
        for (std::size_t j = 0; j <= cols_; ++j)
            at(r, j) /= p;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r)
                continue;
            const double f = at(i, c);
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                at(i, j) -= f * at(r, j);
        }
        basis_[r] = c;
    }

    /// Maximizes obj^T x over columns with allowed[j]. Returns false when unbounded.
    bool run(const std::vector<double>& obj, const std::vector<bool>& allowed, int& pivots) {
        for (;;) {
            // Reduced costs from scratch; cheap at this scale and avoids drift.
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
                if (!allowed[j])
                    continue;
                double rc = obj[j];
                for (std::size_t i = 0; i < rows(); ++i)
                    rc -= obj[basis_[i]] * at(i, j);
                if (rc > kEps)
                    enter = j;
            }
            if (enter == cols_)
                return true;
            std::size_t leave = rows();
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows(); ++i) {
                const double a = at(i, enter);
                if (a <= kEps)
                    continue;
                const double ratio = rhs(i) / a;
                if (ratio < best - kEps || (ratio <= best + kEps && leave < rows() && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == rows())
                return false;
            pivot(leave, enter);
            ++pivots;
        }
    }

private:
    std::size_t cols_;
    std::vector<double> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

void LinearProgram::add_row(Point row, RowSense s, double rhs) {
    a.push_back(std::move(row));
    sense.push_back(s);
    b.push_back(rhs);
}

LpResult solve_lp(const LinearProgram& lp) {
    const std::size_t m = lp.a.size();
    const std::size_t n = lp.c.size();
    if (lp.b.size() != m || lp.sense.size() != m)
        throw InvalidArgument("linear program row data sizes differ");
    for (const auto& row : lp.a)
        if (row.size() != n)
            throw InvalidArgument("linear program row has the wrong width");

    // Normalize to b >= 0.
    std::vector<Point> a = lp.a;
    Point b = lp.b;
    std::vector<RowSense> sense = lp.sense;
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0.0) {
            for (double& v : a[i])
                v = -v;
            b[i] = -b[i];
            if (sense[i] == RowSense::le)
                sense[i] = RowSense::ge;
            else if (sense[i] == RowSense::ge)
                sense[i] = RowSense::le;
        }
    }

    std::size_t n_slack = 0, n_art = 0;
    for (RowSense s : sense) {
        if (s != RowSense::eq)
            ++n_slack;
        if (s != RowSense::le)
            ++n_art;
    }
    const std::size_t cols = n + n_slack + n_art;
    Tableau t(m, cols);
    std::vector<bool> is_art(cols, false);
    std::size_t next_slack = n, next_art = n + n_slack;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            t.at(i, j) = a[i][j];
        t.rhs(i) = b[i];
        switch (sense[i]) {
            case RowSense::le:
                t.at(i, next_slack) = 1.0;
                t.basis()[i] = next_slack++;
                break;
            case RowSense::ge:
                t.at(i, next_slack++) = -1.0;
                [[fallthrough]];
            case RowSense::eq:
                t.at(i, next_art) = 1.0;
                is_art[next_art] = true;
                t.basis()[i] = next_art++;
                break;
        }
    }

    LpResult out;
    std::vector<bool> allowed(cols, true);
    if (n_art > 0) {
        std::vector<double> obj(cols, 0.0);
        for (std::size_t j = 0; j < cols; ++j)
            if (is_art[j])
                obj[j] = -1.0;
        t.run(obj, allowed, out.pivots);
        double infeas = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            if (is_art[t.basis()[i]])
                infeas += t.rhs(i);
        if (infeas > 1e-9) {
            out.status = LpStatus::infeasible;
            return out;
        }
        // Drive zero-level artificials out of the basis where a real column allows it.
        for (std::size_t i = 0; i < m; ++i) {
            if (!is_art[t.basis()[i]])
                continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!is_art[j] && std::fabs(t.at(i, j)) > 1e-9) {
                    t.pivot(i, j);
                    ++out.pivots;
                    break;
                }
            }
        }
        for (std::size_t j = 0; j < cols; ++j)
            allowed[j] = !is_art[j];
    }

    std::vector<double> obj(cols, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        obj[j] = lp.maximize ? lp.c[j] : -lp.c[j];
    if (!t.run(obj, allowed, out.pivots)) {
        out.status = LpStatus::unbounded;
        return out;
    }
    out.status = LpStatus::optimal;
    out.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis()[i] < n)
            out.x[t.basis()[i]] = t.rhs(i);
    double v = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        v += lp.c[j] * out.x[j];
    out.value = v;
    return out;
}

}  // namespace monoconv
