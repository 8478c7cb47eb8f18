#pragma once

#include "ispec/matrix.hpp"

#include <vector>

namespace ispec {

/// Full symmetric eigendecomposition. values are sorted nonincreasing,
/// vectors holds the matching orthonormal eigenvectors as columns. The sign
/// convention (first component above the noise threshold is positive) makes
/// the output a deterministic function of the input bits.
struct EigenPairs {
    std::vector<double> values;
    Matrix vectors;

    std::vector<double> vector(std::size_t i) const {
        std::vector<double> v(vectors.rows());
        for (std::size_t k = 0; k < vectors.rows(); ++k) v[k] = vectors(k, i);
        return v;
    }
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Converges when the
/// off-diagonal Frobenius mass drops below 1e-12 * ||A||_F. Rejects inputs
/// that are not symmetric within 1e-12 relative.
EigenPairs sym_eigen(const Matrix& a);

/// Eigenvalues only (same computation, skips accumulating vectors).
std::vector<double> sym_eigenvalues(const Matrix& a);

/// Perron root of a nonnegative symmetric matrix: rho(R) = lambda_1(R).
/// Rejects negative entries.
double spectral_radius_nonneg(const Matrix& r);

} // namespace ispec
