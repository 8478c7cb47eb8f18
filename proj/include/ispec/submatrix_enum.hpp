#pragma once

#include "ispec/band.hpp"
#include "ispec/interval.hpp"
#include "ispec/outer.hpp"
#include "ispec/sym_interval.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ispec {

/// Eigenpair of a vertex of a principal block, considered as a candidate for
/// improving one inner endpoint.
struct CandidateEigenpair {
    IndexSet j;
    SignVector z;
    std::size_t i = 0; ///< eigenvalue position within the block
    double lambda = 0.0;
    std::vector<double> y; ///< unit eigenvector over J
};

enum class Feasibility : std::uint8_t { CertifiedInfeasible, Unknown };

struct FeasibilityVerdict {
    Feasibility status = Feasibility::Unknown;
    bool infeasible() const { return status == Feasibility::CertifiedInfeasible; }
};

/// Sound pruning oracle for the interval system
///     C y = 0,  (D - lambda I) y = 0,  ||y||_inf = 1,  lambda in window.
/// Forgets the dependencies: M gets midpoint D_c - lambda_c I and radius
/// D_delta + lambda_delta I, and solvability is relaxed to the linear system
/// |M_c y| <= M_delta e, |C_c y| <= C_delta e, -e <= y <= e, split into |J|
/// feasibility problems fixing y_i = 1. CertifiedInfeasible only when every
/// split is infeasible; numerical doubt yields Unknown.
FeasibilityVerdict feasibility_certificate(const SymmetricIntervalMatrix& d,
                                           const IntervalMatrix& c, const Band& lambda_window);

/// Row-wise selection of C* in [C] with C* y = 0, valid whenever 0 lies in
/// [C] y: row r uses t_r = (C_c,r . y) / (C_delta,r . |y|) and
/// C*_rj = C_c,rj - t_r sgn(y_j) C_delta,rj. Rejects inputs with |t_r| > 1
/// beyond tolerance (the zero-product precondition fails there).
Matrix select_matrix_with_zero_product(const IntervalMatrix& c, const std::vector<double>& y);

enum class SearchMode : std::uint8_t { Direct, BranchBound };

struct ImprovementEvent {
    std::uint32_t j_mask = 0;
    std::uint64_t gray_index = 0;
    std::uint32_t i = 0;
    double candidate_lambda = 0.0;
    double endpoint = 0.0;
    bool direct = false;

    friend bool operator==(const ImprovementEvent& a, const ImprovementEvent& b) {
        return a.j_mask == b.j_mask && a.gray_index == b.gray_index && a.i == b.i &&
               a.candidate_lambda == b.candidate_lambda && a.endpoint == b.endpoint &&
               a.direct == b.direct;
    }
};

struct SearchCounters {
    std::uint64_t nodes_visited = 0;
    std::uint64_t nodes_pruned_window = 0;
    std::uint64_t nodes_pruned_infeasible = 0;
    std::uint64_t certificates = 0;
    std::uint64_t block_eigs = 0;
    std::uint64_t candidates_in_window = 0;
    std::uint64_t improvements = 0;

    SearchCounters& operator+=(const SearchCounters& o);
};

struct SideResult {
    double endpoint = 0.0;
    std::optional<Matrix> witness; ///< member attaining the endpoint, when improved
    SearchCounters counters;
    std::vector<ImprovementEvent> log;
};

struct SubmatrixOptions {
    SearchMode mode = SearchMode::BranchBound;
    std::size_t dim_cap = 20;
    bool keep_log = false;
    bool parallel = true; ///< run the independent (p, side) searches concurrently
};

/// One-sided submatrix vertex enumeration for band p (0-based): DFS over the
/// canonical subset tree rooted at J = {1..n}, enumerating the vertices of
/// every principal block and keeping every eigenvalue that falls in the
/// current improvement window and passes the 0 in [C]y test. BranchBound
/// additionally prunes subtrees via feasibility_certificate; the endpoint it
/// returns equals Direct's exactly.
SideResult submatrix_search(const SymmetricIntervalMatrix& a, const OuterBands& omega,
                            std::size_t p, Direction side, const BandSet& seed_inner,
                            const SubmatrixOptions& options = {});

struct SubmatrixResult {
    BandSet bands;
    BandSet seed; ///< the Algorithm-1 seed actually used
    std::vector<SideResult> upper_sides, lower_sides; ///< indexed by band
    SearchCounters totals;
};

/// Runs submatrix_search for the requested band indices on both (or one)
/// side(s), starting from the seed bands. Validates that the seed is
/// contained in omega up to 4-decimal rounding slack.
SubmatrixResult submatrix_enum(const SymmetricIntervalMatrix& a, const OuterBands& omega,
                               const BandSet& seed_inner, const SubmatrixOptions& options = {},
                               const std::vector<std::size_t>* p_indices = nullptr,
                               std::optional<Direction> only_side = std::nullopt);

/// Gap-based exactness flags: exact_hi[i] (i >= 1) iff omega_i.hi <
/// omega_{i-1}.lo, exact_lo[i] (i <= n-2) iff omega_i.lo > omega_{i+1}.hi;
/// the first upper and last lower endpoints take the supplied Hertz flags.
void certify_exact(const OuterBands& omega, bool hertz_top, bool hertz_bottom, BandSet& bands);

/// Band indices worth running: p = 0 or omega_p.hi < omega_{p-1}.lo. Used by
/// the --gaps-only option (upper side; the lower side uses the mirrored test).
std::vector<std::size_t> restrict_to_gap_indices(const OuterBands& omega);
std::vector<std::size_t> restrict_to_gap_indices_lower(const OuterBands& omega);

} // namespace ispec
