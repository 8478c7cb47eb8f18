#pragma once

// Test-only numerical oracles, independent of the library's Jacobi solver:
// eigenvalue counting by LDL^T inertia with bisection, and real-eigenvalue
// isolation for general matrices via determinant sign changes.

#include "ispec/matrix.hpp"

#include <vector>

namespace ispec::oracle {

/// Determinant via LU with partial pivoting.
double det(Matrix m);

/// Number of eigenvalues of a symmetric matrix strictly below sigma.
int count_eigenvalues_below(const Matrix& a, double sigma);

/// All eigenvalues of a symmetric matrix, nonincreasing, by inertia
/// bisection. abs_tol controls the bisection width.
std::vector<double> bisect_sym_eigenvalues(const Matrix& a, double abs_tol = 1e-11);

/// Real eigenvalues of a general square matrix located as sign changes of
/// det(M - tI) on a grid over the Gershgorin disc bound, refined by
/// bisection. Also reports (via the flags) whether the polynomial's sign at
/// the ends of [lo, hi] rules out roots outside that interval of odd
/// multiplicity.
struct RealEigs {
    std::vector<double> values;
    bool parity_clean_below = true; ///< no odd root count below `lo` passed to the call
    bool parity_clean_above = true;
};
RealEigs real_eigenvalues(const Matrix& m, double lo, double hi, int grid = 240);

/// Eigenvalues of a symmetric 2x2 in closed form, nonincreasing.
std::vector<double> eig2x2(double a, double b, double c);

} // namespace ispec::oracle
