#include "ispec/sym_interval.hpp"

#include "ispec/errors.hpp"
#include "ispec/rng.hpp"

#include <algorithm>
#include <cmath>

namespace ispec {

SignVector SignVector::of(const std::vector<double>& v) {
    SignVector z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) z.signs[i] = v[i] >= 0.0 ? +1 : -1;
    return z;
}

SignVector SignVector::from_gray_index(std::size_t size, std::uint64_t index) {
    SignVector z(size);
    const std::uint64_t gray = index ^ (index >> 1);
    for (std::size_t i = 1; i < size; ++i)
        z.signs[i] = (gray >> (i - 1)) & 1 ? -1 : +1;
    return z;
}

SignVector SignVector::negated() const {
    SignVector z(size());
    for (std::size_t i = 0; i < size(); ++i) z.signs[i] = static_cast<std::int8_t>(-signs[i]);
    return z;
}

void SignVector::validate() const {
    for (auto s : signs)
        if (s != 1 && s != -1) throw ValidationError("SignVector: component not +-1");
}

IndexSet IndexSet::full(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return IndexSet(std::move(m));
}

std::vector<std::size_t> IndexSet::complement(std::size_t n) const {
    std::vector<std::size_t> out;
    out.reserve(n - members.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (k < members.size() && members[k] == i) { ++k; continue; }
        out.push_back(i);
    }
    return out;
}

void IndexSet::validate(std::size_t n) const {
    if (members.empty()) throw ValidationError("IndexSet: empty");
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (members[k] >= n) throw ValidationError("IndexSet: index out of range");
        if (k > 0 && members[k] <= members[k - 1])
            throw ValidationError("IndexSet: indices not strictly increasing");
    }
}

SymmetricIntervalMatrix::SymmetricIntervalMatrix(Matrix mid, Matrix rad)
    : mid_(std::move(mid)), rad_(std::move(rad)) {
    if (mid_.rows() != mid_.cols() || rad_.rows() != rad_.cols() || mid_.rows() != rad_.rows())
        throw ValidationError("SymmetricIntervalMatrix: not square or shape mismatch");
    if (!mid_.is_symmetric(1e-12)) throw ValidationError("SymmetricIntervalMatrix: mid not symmetric");
    if (!rad_.is_symmetric(1e-12)) throw ValidationError("SymmetricIntervalMatrix: rad not symmetric");
    if (rad_.min_entry() < 0.0) throw ValidationError("SymmetricIntervalMatrix: negative radius");
    // remove any sub-tolerance asymmetry so vertex matrices are exactly symmetric
    for (std::size_t i = 0; i < mid_.rows(); ++i)
        for (std::size_t j = i + 1; j < mid_.cols(); ++j) {
            mid_(j, i) = mid_(i, j);
            rad_(j, i) = rad_(i, j);
        }
}

SymmetricIntervalMatrix SymmetricIntervalMatrix::from_bounds(const Matrix& lower, const Matrix& upper) {
    IntervalMatrix iv = IntervalMatrix::from_bounds(lower, upper);
    return SymmetricIntervalMatrix(iv.mid(), iv.rad());
}

bool SymmetricIntervalMatrix::contains(const Matrix& a, double tol) const {
    return a.is_symmetric(1e-9) && as_interval().contains(a, tol);
}

Matrix vertex_matrix(const SymmetricIntervalMatrix& a, const SignVector& z, Direction dir) {
    if (z.size() != a.dim()) throw ValidationError("vertex_matrix: sign vector length mismatch");
    const double s = dir == Direction::Upper ? 1.0 : -1.0;
    const std::size_t n = a.dim();
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = a.mid()(i, j) + s * z[i] * z[j] * a.rad()(i, j);
    return out;
}

Decomposition decompose(const SymmetricIntervalMatrix& a, const IndexSet& j) {
    j.validate(a.dim());
    Decomposition dec;
    dec.j_indices = j.members;
    dec.complement_indices = j.complement(a.dim());
    const auto& jj = dec.j_indices;
    const auto& kk = dec.complement_indices;

    auto restrict2 = [&](const Matrix& m, const std::vector<std::size_t>& r,
                         const std::vector<std::size_t>& c) {
        Matrix out(r.size(), c.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t l = 0; l < c.size(); ++l) out(i, l) = m(r[i], c[l]);
        return out;
    };

    dec.d = SymmetricIntervalMatrix(restrict2(a.mid(), jj, jj), restrict2(a.rad(), jj, jj));
    dec.b = SymmetricIntervalMatrix(restrict2(a.mid(), kk, kk), restrict2(a.rad(), kk, kk));
    dec.c = IntervalMatrix(restrict2(a.mid(), kk, jj), restrict2(a.rad(), kk, jj));
    return dec;
}

SymmetricIntervalMatrix jordan_wielandt(const IntervalMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols(), big = m + n;
    Matrix mid(big, big), rad(big, big);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mid(j, n + i) = a.mid()(i, j);
            mid(n + i, j) = a.mid()(i, j);
            rad(j, n + i) = a.rad()(i, j);
            rad(n + i, j) = a.rad()(i, j);
        }
    return SymmetricIntervalMatrix(std::move(mid), std::move(rad));
}

SymmetricIntervalMatrix gram_product(const IntervalMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Matrix mid(n, n), rad(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            IntervalScalar acc{0.0, 0.0};
            for (std::size_t k = 0; k < m; ++k) {
                const IntervalScalar term = i == j ? interval_square(a.entry(k, i))
                                                   : interval_mul(a.entry(k, i), a.entry(k, j));
                acc = interval_add(acc, term);
            }
            mid(i, j) = mid(j, i) = acc.mid();
            rad(i, j) = rad(j, i) = acc.rad();
        }
    return SymmetricIntervalMatrix(std::move(mid), std::move(rad));
}

Matrix sample_member(const SymmetricIntervalMatrix& a, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = a.dim();
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = a.mid()(i, j) + a.rad()(i, j) * rng.symmetric_unit();
            out(i, j) = out(j, i) = v;
        }
    return out;
}

Matrix sample_member(const IntervalMatrix& a, std::uint64_t seed) {
    Rng rng(seed);
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a.mid()(i, j) + a.rad()(i, j) * rng.symmetric_unit();
    return out;
}

} // namespace ispec
