#pragma once

#include "ispec/matrix.hpp"

#include <vector>

namespace ispec {

/// Phase-1 simplex feasibility test for the system
///     A x <= b,   x >= 0,
/// using Bland's rule (anti-cycling). Returns false only when the phase-1
/// optimum exceeds feas_tol; iteration caps and ratio-test anomalies report
/// feasible, so "infeasible" answers are trustworthy and numerical trouble
/// degrades in the conservative direction.
bool lp_feasible_leq(const Matrix& a, const std::vector<double>& b, double feas_tol);

} // namespace ispec
