#include "ispec/outer.hpp"

#include "ispec/eigen.hpp"
#include "ispec/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ispec {

OuterBands outer_bounds(const SymmetricIntervalMatrix& a) {
    const std::vector<double> mid_values = sym_eigenvalues(a.mid());
    const double rho = spectral_radius_nonneg(a.rad());
    OuterBands out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        out.bands[i] = {mid_values[i] - rho, mid_values[i] + rho};
    return out;
}

OuterBands tighten_outer(const OuterBands& omega, const BandSet& vertex_inner) {
    if (omega.size() != vertex_inner.size())
        throw ValidationError("tighten_outer: band count mismatch");
    if (omega.size() == 0) return omega;
    const std::size_t n = omega.size();

    double scale = 0.0;
    for (const Band& b : omega.bands) scale = std::max({scale, std::abs(b.lo), std::abs(b.hi)});
    const double tol = 1e-9 * (1.0 + scale);
    if (vertex_inner.bands[0].hi > omega.bands[0].hi + tol)
        throw ValidationError("tighten_outer: inner upper bound exceeds outer band 1");
    if (vertex_inner.bands[n - 1].lo < omega.bands[n - 1].lo - tol)
        throw ValidationError("tighten_outer: inner lower bound undercuts outer band n");

    OuterBands out = omega;
    out.bands[0].hi = std::min(out.bands[0].hi, vertex_inner.bands[0].hi);
    out.bands[n - 1].lo = std::max(out.bands[n - 1].lo, vertex_inner.bands[n - 1].lo);
    return out;
}

} // namespace ispec
