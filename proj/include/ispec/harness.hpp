#pragma once

#include "ispec/band.hpp"
#include "ispec/interval.hpp"
#include "ispec/local_search.hpp"
#include "ispec/outer.hpp"
#include "ispec/submatrix_enum.hpp"
#include "ispec/sym_interval.hpp"
#include "ispec/vertex_enum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ispec {

/// 1 - sum(rad mu_i) / sum(rad omega_i), clamped to [0, 1]. Zero means the
/// inner and outer bands coincide. Rejects all-degenerate outer bands.
double sharpness(const BandSet& mu, const BandSet& omega);

/// Random benchmark instance: a general n x n interval matrix [A] with
/// midpoints uniform in [-20, 20] and radii uniform in [0, R], returned as
/// the interval Gram product enclosing A^T A. Deterministic per seed.
SymmetricIntervalMatrix random_instance(std::size_t n, double radius, std::uint64_t seed);

/// The underlying rectangular interval matrix of the same protocol.
IntervalMatrix random_rect_instance(std::size_t m, std::size_t n, double radius,
                                    std::uint64_t seed);

/// Directly sampled symmetric interval matrix (midpoints uniform in
/// [-20, 20], radii in [0, R], upper triangle mirrored).
SymmetricIntervalMatrix random_symmetric_instance(std::size_t n, double radius,
                                                  std::uint64_t seed);

/// Empirical inner bands: componentwise min/max of the sorted spectra of
/// `samples` random symmetric members. Always inside the exact sets.
BandSet monte_carlo_inner(const SymmetricIntervalMatrix& a, std::size_t samples,
                          std::uint64_t seed);

enum class Method : std::uint8_t { Local, Vertex, Submatrix };

struct RunOptions {
    Method method = Method::Vertex;
    SearchMode mode = SearchMode::BranchBound;
    std::size_t vertex_cap = 25;
    std::size_t submatrix_cap = 20;
    std::optional<std::vector<Band>> outer; ///< externally supplied outer bands
    bool gaps_only = false;
    std::optional<Direction> side;
    std::optional<std::size_t> p_index; ///< 0-based single band restriction
    bool keep_log = false;
};

/// Everything one eigenvalue-bands run produces.
struct RunReport {
    BandSet bands;
    OuterBands outer_used;
    bool outer_supplied = false;
    BandSet seed;                 ///< Algorithm 1 seed (submatrix method)
    std::vector<int> iterations_upper, iterations_lower; ///< local method
    SearchCounters counters;      ///< submatrix method
    double sharpness_value = 0.0;
    double wall_seconds = 0.0;
    std::vector<std::optional<Matrix>> witness_upper, witness_lower;
};

/// Shared driver behind the `inner` command and the benchmark: computes the
/// requested method's inner bands, the outer bands they are measured
/// against, exactness flags, and the sharpness metric.
RunReport run_eigen_bands(const SymmetricIntervalMatrix& a, const RunOptions& options);

/// Singular value sets of a rectangular interval matrix via the symmetric
/// embedding. Outer bands supplied with q = min(m,n) entries are completed by
/// the exact zero middle sets and mirror-image negative sets.
struct SingularReport {
    RunReport full;   ///< report on the (m+n)-dimensional embedding
    BandSet sigma;    ///< the q largest bands with their flags
};

SingularReport singular_bounds(const IntervalMatrix& a, const RunOptions& options);

struct BenchCell {
    std::size_t rows = 0; ///< 0 for the symmetric (eigenvalue) table
    std::size_t n = 0;
    double radius = 0.0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::vector<Method> methods;
    std::vector<double> sharpness_values; ///< parallel to methods
    std::vector<double> times;
};

struct BenchOptions {
    std::vector<std::size_t> n_list;
    std::vector<double> radius_list;
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    std::vector<Method> methods{Method::Local, Method::Vertex, Method::Submatrix};
    SearchMode mode = SearchMode::BranchBound;
    std::vector<std::size_t> rows_list; ///< nonempty: singular-value table, cells (rows_i, n_j)
    std::size_t vertex_cap = 25;
    std::size_t submatrix_cap = 20;
};

std::vector<BenchCell> run_benchmark(const BenchOptions& options);

std::string method_name(Method m);
Method method_from_name(const std::string& name);

} // namespace ispec
