#pragma once

#include "ispec/band.hpp"
#include "ispec/sym_interval.hpp"

namespace ispec {

/// BandSet in the "outer" role: band i contains the i-th eigenvalue set.
using OuterBands = BandSet;

/// Baseline Weyl-type outer approximation
///     omega_i = [lambda_i(A_c) - rho(A_delta), lambda_i(A_c) + rho(A_delta)].
OuterBands outer_bounds(const SymmetricIntervalMatrix& a);

/// Replace the two endpoints that full vertex enumeration computes exactly:
/// omega_1.hi := mu_1.hi and omega_n.lo := mu_n.lo. vertex_inner must come
/// from Algorithm 2; grossly inconsistent input (inner sticking out of outer)
/// is rejected. Never widens an endpoint.
OuterBands tighten_outer(const OuterBands& omega, const BandSet& vertex_inner);

} // namespace ispec
