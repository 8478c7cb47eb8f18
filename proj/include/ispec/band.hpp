#pragma once

#include <cstddef>
#include <vector>

namespace ispec {

/// One closed eigenvalue band [lo, hi].
struct Band {
    double lo = 0.0;
    double hi = 0.0;

    double rad() const { return 0.5 * (hi - lo); }
    bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
    bool contains(const Band& other, double tol = 0.0) const {
        return other.lo >= lo - tol && other.hi <= hi + tol;
    }
};

/// Ordered vector of n bands (band 0 is the top eigenvalue set) plus
/// per-endpoint exactness flags.
struct BandSet {
    std::vector<Band> bands;
    std::vector<bool> exact_lo; ///< exact_lo[i]: lower endpoint of band i is exact
    std::vector<bool> exact_hi;

    BandSet() = default;
    explicit BandSet(std::size_t n) : bands(n), exact_lo(n, false), exact_hi(n, false) {}

    std::size_t size() const { return bands.size(); }

    double radius_sum() const {
        double s = 0.0;
        for (const Band& b : bands) s += b.rad();
        return s;
    }

    /// Both endpoint sequences nonincreasing in i (ties allowed).
    bool is_monotone(double tol = 0.0) const {
        for (std::size_t i = 0; i + 1 < bands.size(); ++i)
            if (bands[i].lo < bands[i + 1].lo - tol || bands[i].hi < bands[i + 1].hi - tol)
                return false;
        return true;
    }

    bool contains(const BandSet& inner, double tol = 0.0) const {
        if (inner.size() != size()) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (!bands[i].contains(inner.bands[i], tol)) return false;
        return true;
    }
};

} // namespace ispec
