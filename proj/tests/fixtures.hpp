#pragma once

// Shared worked examples: a 3x3 symmetric problem with one wide coupling
// entry, a stiff 4x4 spring-chain style problem, and two rectangular problems
// for the singular value driver, together with their externally computed
// outer bands and the expected inner bands (quoted to 4 decimals).

#include "ispec/band.hpp"
#include "ispec/interval.hpp"
#include "ispec/sym_interval.hpp"

#include <vector>

namespace ispec::fixtures {

inline SymmetricIntervalMatrix sym3() {
    const Matrix mid{{1, 2, 3}, {2, 1, 1}, {3, 1, 1}};
    const Matrix rad{{0, 0, 2}, {0, 0, 0}, {2, 0, 0}};
    return SymmetricIntervalMatrix(mid, rad);
}

inline std::vector<Band> sym3_local_bands() {
    return {{3.7321, 6.7843}, {0.0888, 0.3230}, {-4.1072, -1.0000}};
}
inline std::vector<Band> sym3_outer() {
    return {{3.5230, 6.7843}, {0.0000, 1.0519}, {-4.1214, -0.2019}};
}
inline std::vector<Band> sym3_submatrix_bands() {
    return {{3.7321, 6.7843}, {0.0000, 0.3230}, {-4.1072, -1.0000}};
}

inline SymmetricIntervalMatrix sym4() {
    const Matrix lower{{2975, -2015, 0, 0},
                       {-2015, 4965, -3020, 0},
                       {0, -3020, 6955, -4025},
                       {0, 0, -4025, 8945}};
    const Matrix upper{{3025, -1985, 0, 0},
                       {-1985, 5035, -2980, 0},
                       {0, -2980, 7045, -3975},
                       {0, 0, -3975, 9055}};
    return SymmetricIntervalMatrix::from_bounds(lower, upper);
}

inline std::vector<Band> sym4_inner_bands() {
    return {{12560.8377, 12720.2273},
            {7002.2828, 7126.8283},
            {3337.0785, 3443.3127},
            {842.9251, 967.1082}};
}
inline std::vector<Band> sym4_outer() {
    return {{12560.6296, 12720.2273},
            {6990.7616, 7138.1800},
            {3320.2863, 3459.4322},
            {837.0637, 973.1993}};
}

inline IntervalMatrix rect3x2() {
    const Matrix lower{{2, 1}, {0, 0}, {0, 2}};
    const Matrix upper{{3, 1}, {2, 1}, {1, 3}};
    return IntervalMatrix::from_bounds(lower, upper);
}

inline std::vector<Band> rect3x2_vertex_sigma() {
    return {{2.5616, 4.5431}, {1.2120, 2.8541}};
}
inline std::vector<Band> rect3x2_outer() {
    return {{2.0489, 4.5431}, {0.4239, 3.1817}};
}
inline std::vector<Band> rect3x2_submatrix_sigma() {
    return {{2.5616, 4.5431}, {1.0000, 2.8541}};
}

inline IntervalMatrix rect3x3() {
    const Matrix lower{{0.75, -0.015, 1.7}, {3.55, -5.1, -1.95}, {1.05, 0.005, -10.5}};
    const Matrix upper{{2.25, -0.005, 5.1}, {10.65, -1.7, -0.65}, {3.15, 0.015, -3.5}};
    return IntervalMatrix::from_bounds(lower, upper);
}

inline std::vector<Band> rect3x3_vertex_sigma() {
    return {{4.6611, 13.9371}, {2.2140, 11.5077}, {0.1296, 2.9117}};
}
inline std::vector<Band> rect3x3_outer() {
    return {{4.3308, 14.0115}, {1.9305, 11.6111}, {0.0000, 5.1000}};
}
inline std::vector<Band> rect3x3_submatrix_sigma() {
    return {{4.5548, 13.9371}, {2.2140, 11.5077}, {0.1296, 2.9517}};
}

} // namespace ispec::fixtures
