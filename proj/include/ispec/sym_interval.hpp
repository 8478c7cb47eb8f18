#pragma once

#include "ispec/interval.hpp"
#include "ispec/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ispec {

/// Direction of a vertex matrix / one-sided bound computation.
enum class Direction : std::uint8_t { Upper, Lower };

/// Sign vector z in {+1,-1}^k. Canonical form fixes z[0] = +1, which loses
/// nothing because D_z A_delta D_z is invariant under z -> -z.
struct SignVector {
    std::vector<std::int8_t> signs;

    explicit SignVector(std::size_t k = 0) : signs(k, +1) {}

    std::size_t size() const { return signs.size(); }
    int operator[](std::size_t i) const { return signs[i]; }

    /// Sign pattern of a real vector, with sgn(0) := +1.
    static SignVector of(const std::vector<double>& v);
    /// k-th vertex in Gray-code order over the (size-1) free components,
    /// first component fixed to +1. index < 2^(size-1).
    static SignVector from_gray_index(std::size_t size, std::uint64_t index);

    SignVector negated() const;
    void validate() const;
};

/// Strictly increasing set of 0-based indices into {0..n-1}, selecting a
/// principal submatrix.
struct IndexSet {
    std::vector<std::size_t> members;

    IndexSet() = default;
    explicit IndexSet(std::vector<std::size_t> m) : members(std::move(m)) {}
    static IndexSet full(std::size_t n);

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    std::vector<std::size_t> complement(std::size_t n) const;
    void validate(std::size_t n) const;
};

/// Symmetric interval matrix stored as midpoint/radius pair (A_c, A_delta),
/// both symmetric, radius entrywise nonnegative. Represents the set of
/// symmetric matrices A_c + E with |E| <= A_delta, E = E^T.
class SymmetricIntervalMatrix {
public:
    SymmetricIntervalMatrix() = default;
    SymmetricIntervalMatrix(Matrix mid, Matrix rad);

    static SymmetricIntervalMatrix from_bounds(const Matrix& lower, const Matrix& upper);

    std::size_t dim() const { return mid_.rows(); }
    const Matrix& mid() const { return mid_; }
    const Matrix& rad() const { return rad_; }

    Matrix lower() const { return as_interval().lower(); }
    Matrix upper() const { return as_interval().upper(); }
    IntervalMatrix as_interval() const { return IntervalMatrix(mid_, rad_); }

    bool contains(const Matrix& a, double tol = 0.0) const;

private:
    Matrix mid_, rad_;
};

/// Vertex matrix A_c + D_z A_delta D_z (Upper) or A_c - D_z A_delta D_z
/// (Lower); entry (i,j) equals mid_ij +- z_i z_j rad_ij. Always a member of
/// the symmetric interval matrix.
Matrix vertex_matrix(const SymmetricIntervalMatrix& a, const SignVector& z, Direction dir);

struct Decomposition {
    SymmetricIntervalMatrix b; ///< block over the complement of J
    IntervalMatrix c;          ///< complement x J coupling block
    SymmetricIntervalMatrix d; ///< principal block over J
    std::vector<std::size_t> j_indices;
    std::vector<std::size_t> complement_indices;
};

/// Split A into blocks (B, C, D) according to the index set J: D is the
/// principal block over J, B over the complement, C couples them.
Decomposition decompose(const SymmetricIntervalMatrix& a, const IndexSet& j);

/// Symmetric embedding [[0, A^T], [A, 0]] of size m+n whose q = min(m,n)
/// largest eigenvalue sets are the singular value sets of [A].
SymmetricIntervalMatrix jordan_wielandt(const IntervalMatrix& a);

/// Entrywise interval enclosure of { A^T A : A in [A] }. Diagonal entries use
/// the dependent square per summand, off-diagonal entries the product of
/// independent intervals.
SymmetricIntervalMatrix gram_product(const IntervalMatrix& a);

/// Uniform random symmetric member: upper-triangle entries sampled in
/// [mid - rad, mid + rad] and mirrored. Deterministic for a given seed.
Matrix sample_member(const SymmetricIntervalMatrix& a, std::uint64_t seed);

/// Uniform random (generally nonsymmetric) member of a rectangular interval
/// matrix, all entries independent.
Matrix sample_member(const IntervalMatrix& a, std::uint64_t seed);

} // namespace ispec
