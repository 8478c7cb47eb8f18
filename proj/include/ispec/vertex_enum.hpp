#pragma once

#include "ispec/band.hpp"
#include "ispec/sym_interval.hpp"

#include <cstdint>
#include <vector>

namespace ispec {

struct VertexEnumResult {
    BandSet bands; ///< exact_hi[0] and exact_lo[n-1] are set (Hertz)
    /// Gray-code index of the best vertex per band and side; index == npos
    /// means the midpoint matrix was never beaten.
    std::vector<std::uint64_t> best_upper_index;
    std::vector<std::uint64_t> best_lower_index;
    std::vector<Matrix> witness_upper;
    std::vector<Matrix> witness_lower;
    std::uint64_t vertices_visited = 0;

    static constexpr std::uint64_t npos = ~0ull;
};

/// Inspects all 2^(n-1) vertex matrices A_c +- D_z A_delta D_z with z_1 = +1
/// (Gray-code order) and keeps the componentwise extremes of their spectra,
/// starting from the midpoint spectrum. The top upper endpoint and the bottom
/// lower endpoint are exact. Dimensions above the cap are rejected.
VertexEnumResult vertex_enum_bounds(const SymmetricIntervalMatrix& a, std::size_t dim_cap = 25);

} // namespace ispec
