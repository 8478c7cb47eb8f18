#include "ispec/vertex_enum.hpp"

#include "ispec/eigen.hpp"
#include "ispec/errors.hpp"
#include "ispec/threading.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ispec {

namespace {

struct ChunkBest {
    std::vector<double> upper, lower;
    std::vector<std::uint64_t> upper_idx, lower_idx;
};

} // namespace

VertexEnumResult vertex_enum_bounds(const SymmetricIntervalMatrix& a, std::size_t dim_cap) {
    const std::size_t n = a.dim();
    if (n == 0) throw ValidationError("vertex_enum_bounds: empty matrix");
    if (n > dim_cap)
        throw CapExceededError("vertex_enum_bounds: dimension " + std::to_string(n) +
                               " exceeds cap " + std::to_string(dim_cap) +
                               " (2^(n-1) eigendecompositions)");

    VertexEnumResult res;
    const std::vector<double> mid_values = sym_eigenvalues(a.mid());
    const std::uint64_t total = 1ull << (n - 1);

    // Contiguous Gray-index chunks; each records its local best with
    // first-index-wins ties, and chunks merge in order, so the outcome is the
    // serial one no matter how many workers run.
    const std::uint64_t chunk_size = std::max<std::uint64_t>(1, total / (4 * thread_cap() + 1));
    const std::size_t n_chunks = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
    std::vector<ChunkBest> chunks(n_chunks);

    parallel_tasks(n_chunks, [&](std::size_t ci) {
        ChunkBest& cb = chunks[ci];
        cb.upper.assign(n, -std::numeric_limits<double>::infinity());
        cb.lower.assign(n, std::numeric_limits<double>::infinity());
        cb.upper_idx.assign(n, VertexEnumResult::npos);
        cb.lower_idx.assign(n, VertexEnumResult::npos);
        const std::uint64_t begin = ci * chunk_size;
        const std::uint64_t end = std::min(total, begin + chunk_size);
        for (std::uint64_t g = begin; g < end; ++g) {
            const SignVector z = SignVector::from_gray_index(n, g);
            const std::vector<double> up = sym_eigenvalues(vertex_matrix(a, z, Direction::Upper));
            const std::vector<double> lo = sym_eigenvalues(vertex_matrix(a, z, Direction::Lower));
            for (std::size_t i = 0; i < n; ++i) {
                if (up[i] > cb.upper[i]) { cb.upper[i] = up[i]; cb.upper_idx[i] = g; }
                if (lo[i] < cb.lower[i]) { cb.lower[i] = lo[i]; cb.lower_idx[i] = g; }
            }
        }
    });

    std::vector<double> upper = mid_values, lower = mid_values;
    res.best_upper_index.assign(n, VertexEnumResult::npos);
    res.best_lower_index.assign(n, VertexEnumResult::npos);
    for (const ChunkBest& cb : chunks)
        for (std::size_t i = 0; i < n; ++i) {
            if (cb.upper[i] > upper[i]) { upper[i] = cb.upper[i]; res.best_upper_index[i] = cb.upper_idx[i]; }
            if (cb.lower[i] < lower[i]) { lower[i] = cb.lower[i]; res.best_lower_index[i] = cb.lower_idx[i]; }
        }

    res.bands = BandSet(n);
    res.witness_upper.resize(n);
    res.witness_lower.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        res.bands.bands[i] = {lower[i], upper[i]};
        res.witness_upper[i] =
            res.best_upper_index[i] == VertexEnumResult::npos
                ? a.mid()
                : vertex_matrix(a, SignVector::from_gray_index(n, res.best_upper_index[i]),
                                Direction::Upper);
        res.witness_lower[i] =
            res.best_lower_index[i] == VertexEnumResult::npos
                ? a.mid()
                : vertex_matrix(a, SignVector::from_gray_index(n, res.best_lower_index[i]),
                                Direction::Lower);
    }
    res.bands.exact_hi[0] = true;
    res.bands.exact_lo[n - 1] = true;
    res.vertices_visited = total;
    return res;
}

} // namespace ispec
