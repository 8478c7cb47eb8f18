#include "ispec/eigen.hpp"

#include "ispec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ispec {

namespace {

double offdiag_mass(const Matrix& w) {
    double s = 0.0;
    const std::size_t n = w.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * w(i, j) * w(i, j);
    return std::sqrt(s);
}

// One cyclic Jacobi pass over the strict upper triangle of w, accumulating
// rotations into v when v != nullptr.
void jacobi_sweep(Matrix& w, Matrix* v) {
    const std::size_t n = w.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const double apq = w(p, q);
            if (apq == 0.0) continue;
            const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
            const double sign = theta >= 0.0 ? 1.0 : -1.0;
            const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;

            const double wpp = w(p, p), wqq = w(q, q);
            w(p, p) = wpp - t * apq;
            w(q, q) = wqq + t * apq;
            w(p, q) = w(q, p) = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                const double wkp = w(k, p), wkq = w(k, q);
                w(k, p) = w(p, k) = c * wkp - s * wkq;
                w(k, q) = w(q, k) = s * wkp + c * wkq;
            }
            if (v) {
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = (*v)(k, p), vkq = (*v)(k, q);
                    (*v)(k, p) = c * vkp - s * vkq;
                    (*v)(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
}

constexpr int kMaxSweeps = 64;

void check_symmetric(const Matrix& a) {
    if (a.rows() != a.cols()) throw ValidationError("sym_eigen: matrix not square");
    if (!a.is_symmetric(1e-12)) throw ValidationError("sym_eigen: matrix not symmetric");
}

} // namespace

EigenPairs sym_eigen(const Matrix& a) {
    check_symmetric(a);
    const std::size_t n = a.rows();
    EigenPairs out;
    if (n == 1) {
        out.values = {a(0, 0)};
        out.vectors = Matrix(1, 1, 1.0);
        return out;
    }

    Matrix w = a;
    Matrix v = Matrix::identity(n);
    const double eps = 1e-12 * a.frobenius_norm();
    for (int sweep = 0; sweep < kMaxSweeps && offdiag_mass(w) > eps; ++sweep)
        jacobi_sweep(w, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return w(i, i) > w(j, j); });

    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.values[col] = w(src, src);
        double flip = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (std::abs(v(k, src)) > eps) {
                flip = v(k, src) > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = flip * v(k, src);
    }
    return out;
}

std::vector<double> sym_eigenvalues(const Matrix& a) {
    check_symmetric(a);
    const std::size_t n = a.rows();
    if (n == 1) return {a(0, 0)};
    Matrix w = a;
    const double eps = 1e-12 * a.frobenius_norm();
    for (int sweep = 0; sweep < kMaxSweeps && offdiag_mass(w) > eps; ++sweep)
        jacobi_sweep(w, nullptr);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = w(i, i);
    std::stable_sort(vals.begin(), vals.end(), std::greater<double>());
    return vals;
}

double spectral_radius_nonneg(const Matrix& r) {
    if (r.rows() == 0) return 0.0;
    if (r.min_entry() < 0.0) throw ValidationError("spectral_radius_nonneg: negative entry");
    return sym_eigenvalues(r).front();
}

} // namespace ispec
