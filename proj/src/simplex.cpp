#include "ispec/simplex.hpp"

#include "ispec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ispec {

namespace {
constexpr double kPivotTol = 1e-11;
}

bool lp_feasible_leq(const Matrix& a, const std::vector<double>& b, double feas_tol) {
    const std::size_t rows = a.rows();
    const std::size_t nvar = a.cols();
    if (b.size() != rows) throw ValidationError("lp_feasible_leq: rhs size mismatch");

    if (nvar == 0) {
        for (double v : b)
            if (v < -feas_tol) return false;
        return true;
    }
    bool any_negative = false;
    for (double v : b)
        if (v < 0.0) any_negative = true;
    if (!any_negative) return true; // x = 0 already feasible

    // Columns: [0, nvar) structural, [nvar, nvar+rows) slacks, then one
    // artificial per negative-rhs row. Rows with b_r < 0 are negated so every
    // tableau rhs starts nonnegative.
    std::size_t n_art = 0;
    for (double v : b)
        if (v < 0.0) ++n_art;
    const std::size_t ncols = nvar + rows + n_art;

    std::vector<std::vector<double>> t(rows, std::vector<double>(ncols + 1, 0.0));
    std::vector<std::size_t> basis(rows);
    std::vector<double> obj(ncols + 1, 0.0); // obj[j]: coefficient in w = obj[rhs] - sum obj[j] x_j

    std::size_t art = nvar + rows;
    for (std::size_t r = 0; r < rows; ++r) {
        const double sgn = b[r] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < nvar; ++j) t[r][j] = sgn * a(r, j);
        t[r][nvar + r] = sgn; // slack
        t[r][ncols] = sgn * b[r];
        if (b[r] < 0.0) {
            t[r][art] = 1.0;
            basis[r] = art++;
            for (std::size_t j = 0; j <= ncols; ++j) obj[j] += t[r][j];
        } else {
            basis[r] = nvar + r;
        }
    }
    const std::size_t first_art = nvar + rows;

    const std::size_t max_iter = 2000 + 60 * (rows + ncols);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        if (obj[ncols] <= feas_tol) return true;

        // Bland: entering column = smallest index with positive reduced gain;
        // artificials never re-enter.
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < first_art; ++j) {
            bool in_basis = false;
            for (std::size_t r = 0; r < rows; ++r)
                if (basis[r] == j) { in_basis = true; break; }
            if (!in_basis && obj[j] > kPivotTol) { enter = j; break; }
        }
        if (enter == ncols) return obj[ncols] <= feas_tol; // phase-1 optimum reached

        std::size_t leave = rows;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] > kPivotTol) {
                const double ratio = t[r][ncols] / t[r][enter];
                if (ratio < best_ratio - kPivotTol ||
                    (ratio < best_ratio + kPivotTol && (leave == rows || basis[r] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
        }
        if (leave == rows) return true; // cannot happen for a bounded phase-1; be conservative

        const double piv = t[leave][enter];
        for (std::size_t j = 0; j <= ncols; ++j) t[leave][j] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave) continue;
            const double f = t[r][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= ncols; ++j) t[r][j] -= f * t[leave][j];
        }
        const double fo = obj[enter];
        if (fo != 0.0)
            for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= fo * t[leave][j];
        basis[leave] = enter;
    }
    return true; // iteration cap: numerical doubt counts as feasible
}

} // namespace ispec
