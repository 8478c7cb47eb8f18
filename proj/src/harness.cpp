#include "ispec/harness.hpp"

#include "ispec/eigen.hpp"
#include "ispec/errors.hpp"
#include "ispec/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace ispec {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

double sharpness(const BandSet& mu, const BandSet& omega) {
    if (mu.size() != omega.size()) throw ValidationError("sharpness: band count mismatch");
    const double denom = omega.radius_sum();
    if (denom <= 0.0) throw ValidationError("sharpness: degenerate outer bands (all points)");
    const double value = 1.0 - mu.radius_sum() / denom;
    return std::clamp(value, 0.0, 1.0);
}

IntervalMatrix random_rect_instance(std::size_t m, std::size_t n, double radius,
                                    std::uint64_t seed) {
    if (m == 0 || n == 0) throw ValidationError("random_rect_instance: empty shape");
    if (radius < 0.0) throw ValidationError("random_rect_instance: negative radius");
    Rng rng(seed);
    Matrix mid(m, n), rad(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) mid(i, j) = rng.uniform(-20.0, 20.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) rad(i, j) = rng.uniform(0.0, radius);
    return IntervalMatrix(std::move(mid), std::move(rad));
}

SymmetricIntervalMatrix random_instance(std::size_t n, double radius, std::uint64_t seed) {
    return gram_product(random_rect_instance(n, n, radius, seed));
}

SymmetricIntervalMatrix random_symmetric_instance(std::size_t n, double radius,
                                                  std::uint64_t seed) {
    if (n == 0) throw ValidationError("random_symmetric_instance: empty shape");
    Rng rng(seed);
    Matrix mid(n, n), rad(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) mid(i, j) = mid(j, i) = rng.uniform(-20.0, 20.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) rad(i, j) = rad(j, i) = rng.uniform(0.0, radius);
    return SymmetricIntervalMatrix(std::move(mid), std::move(rad));
}

BandSet monte_carlo_inner(const SymmetricIntervalMatrix& a, std::size_t samples,
                          std::uint64_t seed) {
    if (samples == 0) throw ValidationError("monte_carlo_inner: need at least one sample");
    const std::size_t n = a.dim();
    BandSet out(n);
    Rng seeder(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const Matrix member = sample_member(a, seeder.next_u64());
        const std::vector<double> vals = sym_eigenvalues(member);
        for (std::size_t i = 0; i < n; ++i) {
            if (s == 0) {
                out.bands[i] = {vals[i], vals[i]};
            } else {
                out.bands[i].lo = std::min(out.bands[i].lo, vals[i]);
                out.bands[i].hi = std::max(out.bands[i].hi, vals[i]);
            }
        }
    }
    return out;
}

RunReport run_eigen_bands(const SymmetricIntervalMatrix& a, const RunOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = a.dim();
    RunReport rep;
    rep.witness_upper.assign(n, std::nullopt);
    rep.witness_lower.assign(n, std::nullopt);

    std::optional<VertexEnumResult> vertex_result;
    if (options.outer) {
        if (options.outer->size() != n)
            throw ValidationError("outer bands: expected " + std::to_string(n) + " entries");
        rep.outer_used = OuterBands(n);
        rep.outer_used.bands = *options.outer;
        rep.outer_supplied = true;
    } else {
        rep.outer_used = outer_bounds(a);
        if ((options.method == Method::Vertex || options.method == Method::Submatrix) &&
            n <= options.vertex_cap) {
            vertex_result = vertex_enum_bounds(a, options.vertex_cap);
            rep.outer_used = tighten_outer(rep.outer_used, vertex_result->bands);
        }
    }

    switch (options.method) {
    case Method::Local: {
        LocalResult lr = local_band_set(a);
        rep.bands = lr.bands;
        rep.iterations_upper = lr.upper.iterations;
        rep.iterations_lower = lr.lower.iterations;
        for (std::size_t i = 0; i < n; ++i) {
            rep.witness_upper[i] = lr.upper.witnesses[i];
            rep.witness_lower[i] = lr.lower.witnesses[i];
        }
        break;
    }
    case Method::Vertex: {
        if (!vertex_result) vertex_result = vertex_enum_bounds(a, options.vertex_cap);
        rep.bands = vertex_result->bands;
        for (std::size_t i = 0; i < n; ++i) {
            rep.witness_upper[i] = vertex_result->witness_upper[i];
            rep.witness_lower[i] = vertex_result->witness_lower[i];
        }
        break;
    }
    case Method::Submatrix: {
        LocalResult lr = local_band_set(a);
        rep.seed = lr.bands;
        rep.iterations_upper = lr.upper.iterations;
        rep.iterations_lower = lr.lower.iterations;

        std::vector<std::size_t> ps_upper, ps_lower;
        if (options.p_index) {
            if (*options.p_index >= n) throw ValidationError("--p: band index out of range");
            ps_upper = ps_lower = {*options.p_index};
        } else if (options.gaps_only) {
            ps_upper = restrict_to_gap_indices(rep.outer_used);
            ps_lower = restrict_to_gap_indices_lower(rep.outer_used);
        } else {
            ps_upper = ps_lower = IndexSet::full(n).members;
        }
        const bool run_upper = !options.side || *options.side == Direction::Upper;
        const bool run_lower = !options.side || *options.side == Direction::Lower;

        SubmatrixOptions so;
        so.mode = options.mode;
        so.dim_cap = options.submatrix_cap;
        so.keep_log = options.keep_log;

        rep.bands = lr.bands;
        std::vector<bool> ran_upper(n, false), ran_lower(n, false);
        if (run_upper && !ps_upper.empty()) {
            SubmatrixResult r =
                submatrix_enum(a, rep.outer_used, lr.bands, so, &ps_upper, Direction::Upper);
            for (std::size_t p : ps_upper) {
                rep.bands.bands[p].hi = r.bands.bands[p].hi;
                ran_upper[p] = true;
                rep.witness_upper[p] = r.upper_sides[p].witness ? r.upper_sides[p].witness
                                                                : std::optional<Matrix>(lr.upper.witnesses[p]);
                rep.counters += r.upper_sides[p].counters;
            }
        }
        if (run_lower && !ps_lower.empty()) {
            SubmatrixResult r =
                submatrix_enum(a, rep.outer_used, lr.bands, so, &ps_lower, Direction::Lower);
            for (std::size_t p : ps_lower) {
                rep.bands.bands[p].lo = r.bands.bands[p].lo;
                ran_lower[p] = true;
                rep.witness_lower[p] = r.lower_sides[p].witness ? r.lower_sides[p].witness
                                                                : std::optional<Matrix>(lr.lower.witnesses[p]);
                rep.counters += r.lower_sides[p].counters;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!rep.witness_upper[i]) rep.witness_upper[i] = lr.upper.witnesses[i];
            if (!rep.witness_lower[i]) rep.witness_lower[i] = lr.lower.witnesses[i];
        }

        certify_exact(rep.outer_used, ran_upper[0], ran_lower[n - 1], rep.bands);
        for (std::size_t i = 0; i < n; ++i) {
            if (!ran_upper[i]) rep.bands.exact_hi[i] = false;
            if (!ran_lower[i]) rep.bands.exact_lo[i] = false;
        }
        break;
    }
    }

    rep.sharpness_value = rep.outer_used.radius_sum() > 0.0 ? sharpness(rep.bands, rep.outer_used) : 0.0;
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

SingularReport singular_bounds(const IntervalMatrix& a, const RunOptions& options) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t q = std::min(m, n), big = m + n;
    const SymmetricIntervalMatrix embedding = jordan_wielandt(a);

    RunOptions adjusted = options;
    if (options.outer) {
        if (options.outer->size() == q && q != big) {
            // Complete q singular bands to the full embedding spectrum: the
            // |m-n| middle sets are exactly {0}, the rest mirror negatively.
            std::vector<Band> full(big);
            for (std::size_t i = 0; i < q; ++i) full[i] = (*options.outer)[i];
            for (std::size_t i = q; i < big - q; ++i) full[i] = {0.0, 0.0};
            for (std::size_t i = 0; i < q; ++i)
                full[big - 1 - i] = {-(*options.outer)[i].hi, -(*options.outer)[i].lo};
            adjusted.outer = std::move(full);
        } else if (options.outer->size() != big) {
            throw ValidationError("singular outer bands: expected " + std::to_string(q) + " or " +
                                  std::to_string(big) + " entries");
        }
    }
    SingularReport out;
    if (options.method == Method::Submatrix && !options.p_index && !options.gaps_only) {
        // Only the q largest eigenvalue sets of the embedding are singular
        // value sets, so restrict the search to those bands.
        std::vector<std::size_t> ps(q);
        for (std::size_t i = 0; i < q; ++i) ps[i] = i;
        const auto t0 = std::chrono::steady_clock::now();
        RunReport rep;
        rep.witness_upper.assign(big, std::nullopt);
        rep.witness_lower.assign(big, std::nullopt);
        std::optional<VertexEnumResult> vr;
        if (adjusted.outer) {
            rep.outer_used = OuterBands(big);
            rep.outer_used.bands = *adjusted.outer;
            rep.outer_supplied = true;
        } else {
            rep.outer_used = outer_bounds(embedding);
            if (big <= adjusted.vertex_cap) {
                vr = vertex_enum_bounds(embedding, adjusted.vertex_cap);
                rep.outer_used = tighten_outer(rep.outer_used, vr->bands);
            }
        }
        LocalResult lr = local_band_set(embedding);
        rep.seed = lr.bands;
        SubmatrixOptions so;
        so.mode = adjusted.mode;
        so.dim_cap = adjusted.submatrix_cap;
        so.keep_log = adjusted.keep_log;
        SubmatrixResult r = submatrix_enum(embedding, rep.outer_used, lr.bands, so, &ps);
        rep.bands = lr.bands;
        std::vector<bool> ran(big, false);
        for (std::size_t p : ps) {
            rep.bands.bands[p] = r.bands.bands[p];
            ran[p] = true;
            rep.witness_upper[p] = r.upper_sides[p].witness ? r.upper_sides[p].witness
                                                            : std::optional<Matrix>(lr.upper.witnesses[p]);
            rep.witness_lower[p] = r.lower_sides[p].witness ? r.lower_sides[p].witness
                                                            : std::optional<Matrix>(lr.lower.witnesses[p]);
            rep.counters += r.upper_sides[p].counters;
            rep.counters += r.lower_sides[p].counters;
        }
        certify_exact(rep.outer_used, ran[0], false, rep.bands);
        for (std::size_t i = 0; i < big; ++i) {
            if (!ran[i]) {
                rep.bands.exact_hi[i] = false;
                rep.bands.exact_lo[i] = false;
            }
        }
        rep.sharpness_value =
            rep.outer_used.radius_sum() > 0.0 ? sharpness(rep.bands, rep.outer_used) : 0.0;
        rep.wall_seconds = seconds_since(t0);
        out.full = std::move(rep);
    } else {
        out.full = run_eigen_bands(embedding, adjusted);
    }

    out.sigma = BandSet(q);
    for (std::size_t i = 0; i < q; ++i) {
        out.sigma.bands[i] = out.full.bands.bands[i];
        out.sigma.exact_lo[i] = out.full.bands.exact_lo[i];
        out.sigma.exact_hi[i] = out.full.bands.exact_hi[i];
    }
    return out;
}

std::vector<BenchCell> run_benchmark(const BenchOptions& options) {
    std::vector<BenchCell> cells;
    const bool singular = !options.rows_list.empty();
    std::vector<std::size_t> rows = singular ? options.rows_list : std::vector<std::size_t>{0};

    for (std::size_t mrow : rows) {
        for (std::size_t n : options.n_list) {
            for (std::size_t ri = 0; ri < options.radius_list.size(); ++ri) {
                const double radius = options.radius_list[ri];
                for (std::size_t trial = 0; trial < options.trials; ++trial) {
                    BenchCell cell;
                    cell.rows = mrow;
                    cell.n = n;
                    cell.radius = radius;
                    cell.trial = trial;
                    cell.seed = derive_seed(options.seed, n + (mrow << 20), ri, trial);
                    cell.methods = options.methods;

                    RunOptions run;
                    run.mode = options.mode;
                    run.vertex_cap = options.vertex_cap;
                    run.submatrix_cap = options.submatrix_cap;

                    if (!singular) {
                        const SymmetricIntervalMatrix a = random_instance(n, radius, cell.seed);
                        OuterBands omega = outer_bounds(a);
                        if (n <= options.vertex_cap)
                            omega = tighten_outer(omega, vertex_enum_bounds(a, options.vertex_cap).bands);
                        run.outer = omega.bands;
                        for (Method m : options.methods) {
                            run.method = m;
                            const RunReport rep = run_eigen_bands(a, run);
                            cell.sharpness_values.push_back(rep.sharpness_value);
                            cell.times.push_back(rep.wall_seconds);
                        }
                    } else {
                        const IntervalMatrix a = random_rect_instance(mrow, n, radius, cell.seed);
                        const std::size_t q = std::min(mrow, n);
                        const SymmetricIntervalMatrix embedding = jordan_wielandt(a);
                        OuterBands omega = outer_bounds(embedding);
                        if (mrow + n <= options.vertex_cap)
                            omega = tighten_outer(omega,
                                                  vertex_enum_bounds(embedding, options.vertex_cap).bands);
                        run.outer = omega.bands;
                        for (Method m : options.methods) {
                            run.method = m;
                            const SingularReport rep = singular_bounds(a, run);
                            BandSet mu_q(q), omega_q(q);
                            for (std::size_t i = 0; i < q; ++i) {
                                mu_q.bands[i] = rep.sigma.bands[i];
                                omega_q.bands[i] = omega.bands[i];
                            }
                            const double s =
                                omega_q.radius_sum() > 0.0 ? sharpness(mu_q, omega_q) : 0.0;
                            cell.sharpness_values.push_back(s);
                            cell.times.push_back(rep.full.wall_seconds);
                        }
                    }
                    cells.push_back(std::move(cell));
                }
            }
        }
    }
    return cells;
}

std::string method_name(Method m) {
    switch (m) {
    case Method::Local: return "local";
    case Method::Vertex: return "vertex";
    case Method::Submatrix: return "submatrix";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "local") return Method::Local;
    if (name == "vertex") return Method::Vertex;
    if (name == "submatrix") return Method::Submatrix;
    throw ValidationError("unknown method '" + name + "' (expected local|vertex|submatrix)");
}

} // namespace ispec
