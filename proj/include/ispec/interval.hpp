#pragma once

#include "ispec/matrix.hpp"

#include <cstddef>
#include <vector>

namespace ispec {

/// One closed interval [lo, hi].
struct IntervalScalar {
    double lo = 0.0;
    double hi = 0.0;

    double mid() const { return 0.5 * (lo + hi); }
    double rad() const { return 0.5 * (hi - lo); }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

IntervalScalar interval_add(IntervalScalar a, IntervalScalar b);
/// Product of two independent intervals (min/max over the four corners).
IntervalScalar interval_mul(IntervalScalar a, IntervalScalar b);
/// Range of x^2 over x in [a] (dependent square, tighter than a*a).
IntervalScalar interval_square(IntervalScalar a);

/// Rectangular interval matrix stored as midpoint/radius. The algorithms
/// consume mid and rad directly; lower/upper views are derived for I/O.
class IntervalMatrix {
public:
    IntervalMatrix() = default;
    IntervalMatrix(Matrix mid, Matrix rad);

    static IntervalMatrix from_bounds(const Matrix& lower, const Matrix& upper);

    std::size_t rows() const { return mid_.rows(); }
    std::size_t cols() const { return mid_.cols(); }

    const Matrix& mid() const { return mid_; }
    const Matrix& rad() const { return rad_; }

    IntervalScalar entry(std::size_t i, std::size_t j) const {
        return {mid_(i, j) - rad_(i, j), mid_(i, j) + rad_(i, j)};
    }
    Matrix lower() const;
    Matrix upper() const;

    bool contains(const Matrix& a, double tol = 0.0) const;

private:
    Matrix mid_, rad_;
};

struct IntervalVectorResult {
    std::vector<IntervalScalar> components;
    bool contains_zero = false;
};

/// Componentwise range of C*y over C in [C]:  [C_c y - C_delta |y|, C_c y + C_delta |y|].
/// contains_zero reports whether 0 lies in every component within
/// tau_zero = 1e-12 * (1 + ||C_c||_inf * ||y||_inf).
IntervalVectorResult interval_matvec(const IntervalMatrix& c, const std::vector<double>& y);

} // namespace ispec
