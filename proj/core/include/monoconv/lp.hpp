#pragma once

#include "monoconv/core.hpp"

#include <vector>

namespace monoconv {

enum class RowSense { le, ge, eq };

/// optimize c^T x subject to A x (sense) b, x >= 0.
struct LinearProgram {
    std::vector<Point> a;
    Point b;
    std::vector<RowSense> sense;
    Point c;
    bool maximize = true;

    void add_row(Point row, RowSense s, double rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    double value = 0.0;
    Point x;
    int pivots = 0;
};

/// Dense two-phase tableau simplex with Bland's rule. Meant for the tiny
/// programs of the verification routines (tens of rows and columns).
LpResult solve_lp(const LinearProgram& lp);

}  // namespace monoconv
