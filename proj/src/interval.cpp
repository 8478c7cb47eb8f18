#include "ispec/interval.hpp"

#include "ispec/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ispec {

IntervalScalar interval_add(IntervalScalar a, IntervalScalar b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

IntervalScalar interval_mul(IntervalScalar a, IntervalScalar b) {
    const double c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

IntervalScalar interval_square(IntervalScalar a) {
    const double l2 = a.lo * a.lo, h2 = a.hi * a.hi;
    if (a.lo >= 0.0) return {l2, h2};
    if (a.hi <= 0.0) return {h2, l2};
    return {0.0, std::max(l2, h2)};
}

IntervalMatrix::IntervalMatrix(Matrix mid, Matrix rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
    if (mid_.rows() != rad_.rows() || mid_.cols() != rad_.cols())
        throw ValidationError("IntervalMatrix: mid/rad shape mismatch");
    if (rad_.min_entry() < 0.0)
        throw ValidationError("IntervalMatrix: negative radius entry");
}

IntervalMatrix IntervalMatrix::from_bounds(const Matrix& lower, const Matrix& upper) {
    if (lower.rows() != upper.rows() || lower.cols() != upper.cols())
        throw ValidationError("IntervalMatrix: lower/upper shape mismatch");
    Matrix mid(lower.rows(), lower.cols()), rad(lower.rows(), lower.cols());
    for (std::size_t i = 0; i < lower.rows(); ++i)
        for (std::size_t j = 0; j < lower.cols(); ++j) {
            if (lower(i, j) > upper(i, j))
                throw ValidationError("IntervalMatrix: lower > upper entry");
            mid(i, j) = 0.5 * (lower(i, j) + upper(i, j));
            rad(i, j) = 0.5 * (upper(i, j) - lower(i, j));
        }
    return IntervalMatrix(std::move(mid), std::move(rad));
}

Matrix IntervalMatrix::lower() const {
    Matrix l(rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) l(i, j) = mid_(i, j) - rad_(i, j);
    return l;
}

Matrix IntervalMatrix::upper() const {
    Matrix u(rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) u(i, j) = mid_(i, j) + rad_(i, j);
    return u;
}

bool IntervalMatrix::contains(const Matrix& a, double tol) const {
    if (a.rows() != rows() || a.cols() != cols()) return false;
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            if (std::abs(a(i, j) - mid_(i, j)) > rad_(i, j) + tol) return false;
    return true;
}

IntervalVectorResult interval_matvec(const IntervalMatrix& c, const std::vector<double>& y) {
    if (y.size() != c.cols()) throw ValidationError("interval_matvec: dimension mismatch");
    IntervalVectorResult out;
    const std::vector<double> mid = c.mid().matvec(y);
    const std::vector<double> rad = c.rad().matvec(abs_vec(y));
    const double tau = 1e-12 * (1.0 + c.mid().inf_norm() * inf_norm(y));
    out.components.resize(c.rows());
    out.contains_zero = true;
    for (std::size_t r = 0; r < c.rows(); ++r) {
        out.components[r] = {mid[r] - rad[r], mid[r] + rad[r]};
        if (out.components[r].lo > tau || out.components[r].hi < -tau) out.contains_zero = false;
    }
    return out;
}

} // namespace ispec
