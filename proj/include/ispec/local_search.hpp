#pragma once

#include "ispec/band.hpp"
#include "ispec/eigen.hpp"
#include "ispec/sym_interval.hpp"

#include <vector>

namespace ispec {

/// One-sided result of the local improvement search.
struct LocalHalf {
    std::vector<double> values;      ///< best lambda_i found, i = 0..n-1
    std::vector<int> iterations;     ///< vertex constructions per index
    std::vector<Matrix> witnesses;   ///< member attaining values[i]
    std::vector<std::vector<double>> history; ///< accepted lambda_i sequence per index
};

/// Algorithm: start from the midpoint matrix and repeatedly jump to the
/// vertex matrix selected by the sign pattern of the current i-th
/// eigenvector, while lambda_i improves by more than the relative threshold
/// eps_improve * (1 + |lambda_i|). Every visited matrix is a member, so each
/// returned value is attained and the bound is a valid inner bound.
LocalHalf local_bounds(const SymmetricIntervalMatrix& a, Direction dir,
                       double eps_improve = 1e-10);

/// Both sweeps assembled into an inner BandSet (no exactness claims).
struct LocalResult {
    BandSet bands;
    LocalHalf upper;
    LocalHalf lower;
};

LocalResult local_band_set(const SymmetricIntervalMatrix& a, double eps_improve = 1e-10);

} // namespace ispec
