#include "oracle.hpp"

#include <algorithm>
#include <cmath>

namespace ispec::oracle {

double det(Matrix m) {
    const std::size_t n = m.rows();
    double sign = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        if (m(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    double d = sign;
    for (std::size_t k = 0; k < n; ++k) d *= m(k, k);
    return d;
}

int count_eigenvalues_below(const Matrix& a, double sigma) {
    const std::size_t n = a.rows();
    const double scale = std::max(1.0, a.max_abs() + std::abs(sigma));
    Matrix w = a;
    for (std::size_t i = 0; i < n; ++i) w(i, i) -= sigma;
    int neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double piv = w(k, k);
        if (std::abs(piv) < 1e-14 * scale) piv = piv >= 0.0 ? 1e-14 * scale : -1e-14 * scale;
        if (piv < 0.0) ++neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = w(i, k) / piv;
            for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= f * w(k, j);
            w(i, k) = 0.0;
        }
    }
    return neg;
}

std::vector<double> bisect_sym_eigenvalues(const Matrix& a, double abs_tol) {
    const std::size_t n = a.rows();
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j));
        radius = std::max(radius, row);
    }
    radius += 1.0;

    std::vector<double> out(n);
    for (std::size_t k = 1; k <= n; ++k) { // k-th smallest
        double lo = -radius, hi = radius;
        while (hi - lo > abs_tol * (1.0 + std::abs(lo) + std::abs(hi))) {
            const double mid = 0.5 * (lo + hi);
            if (count_eigenvalues_below(a, mid) >= static_cast<int>(k)) hi = mid;
            else lo = mid;
        }
        out[n - k] = 0.5 * (lo + hi);
    }
    return out;
}

RealEigs real_eigenvalues(const Matrix& m, double lo, double hi, int grid) {
    const std::size_t n = m.rows();
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(m(i, j));
        radius = std::max(radius, row);
    }
    const double a = -radius - 1.0, b = radius + 1.0;

    auto p = [&](double t) {
        Matrix w = m;
        for (std::size_t i = 0; i < n; ++i) w(i, i) -= t;
        return det(w);
    };

    RealEigs out;
    double prev_t = a, prev_v = p(a);
    for (int g = 1; g <= grid; ++g) {
        const double t = a + (b - a) * g / grid;
        const double v = p(t);
        if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0) || v == 0.0) {
            double x0 = prev_t, x1 = t, f0 = prev_v;
            for (int it = 0; it < 80 && x1 - x0 > 1e-12 * (1.0 + std::abs(x0)); ++it) {
                const double xm = 0.5 * (x0 + x1);
                const double fm = p(xm);
                if (fm == 0.0) { x0 = x1 = xm; break; }
                if ((f0 < 0.0) != (fm < 0.0)) x1 = xm;
                else { x0 = xm; f0 = fm; }
            }
            out.values.push_back(0.5 * (x0 + x1));
        }
        prev_t = t;
        prev_v = v;
    }

    // Parity backstop: sign of p just outside [lo, hi] versus the asymptotic
    // sign of det(M - tI) = prod(lambda_i - t).
    const double sign_neg_inf = 1.0;                       // t -> -inf
    const double sign_pos_inf = (n % 2 == 0) ? 1.0 : -1.0; // t -> +inf
    const double pl = p(lo), ph = p(hi);
    if (pl != 0.0 && (pl > 0.0) != (sign_neg_inf > 0.0)) out.parity_clean_below = false;
    if (ph != 0.0 && (ph > 0.0) != (sign_pos_inf > 0.0)) out.parity_clean_above = false;
    return out;
}

std::vector<double> eig2x2(double a, double b, double c) {
    const double tr = a + c;
    const double disc = std::sqrt((a - c) * (a - c) + 4.0 * b * b);
    return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

} // namespace ispec::oracle
