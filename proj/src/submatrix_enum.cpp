#include "ispec/submatrix_enum.hpp"

#include "ispec/eigen.hpp"
#include "ispec/errors.hpp"
#include "ispec/simplex.hpp"
#include "ispec/threading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ispec {

SearchCounters& SearchCounters::operator+=(const SearchCounters& o) {
    nodes_visited += o.nodes_visited;
    nodes_pruned_window += o.nodes_pruned_window;
    nodes_pruned_infeasible += o.nodes_pruned_infeasible;
    certificates += o.certificates;
    block_eigs += o.block_eigs;
    candidates_in_window += o.candidates_in_window;
    improvements += o.improvements;
    return *this;
}

FeasibilityVerdict feasibility_certificate(const SymmetricIntervalMatrix& d,
                                           const IntervalMatrix& c, const Band& lambda_window) {
    const std::size_t k = d.dim();
    const std::size_t extra = c.rows();
    const double lam_mid = 0.5 * (lambda_window.lo + lambda_window.hi);
    const double lam_rad = 0.5 * (lambda_window.hi - lambda_window.lo);

    // Stacked system G y in [-rhs, rhs]: k rows from D - lambda I, then the
    // coupling rows of C.
    Matrix g(k + extra, k);
    std::vector<double> rhs(k + extra, 0.0);
    for (std::size_t r = 0; r < k; ++r) {
        double radsum = lam_rad;
        for (std::size_t j = 0; j < k; ++j) {
            g(r, j) = d.mid()(r, j) - (r == j ? lam_mid : 0.0);
            radsum += d.rad()(r, j);
        }
        rhs[r] = radsum;
    }
    for (std::size_t r = 0; r < extra; ++r) {
        double radsum = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            g(k + r, j) = c.mid()(r, j);
            radsum += c.rad()(r, j);
        }
        rhs[k + r] = radsum;
    }

    double scale = 0.0;
    for (std::size_t r = 0; r < g.rows(); ++r) scale = std::max(scale, std::abs(rhs[r]));
    scale = std::max(scale, g.max_abs());
    const double feas_tol = 1e-9 * (1.0 + scale);

    for (std::size_t fixed = 0; fixed < k; ++fixed) {
        // y_fixed = 1; remaining variables shifted to x = y + 1 in [0, 2].
        const std::size_t m = k - 1;
        const std::size_t rows = 2 * g.rows() + m;
        Matrix lp(rows, m);
        std::vector<double> b(rows, 0.0);
        for (std::size_t r = 0; r < g.rows(); ++r) {
            double shift = 0.0; // G' * 1
            std::size_t col = 0;
            for (std::size_t j = 0; j < k; ++j) {
                if (j == fixed) continue;
                lp(r, col) = g(r, j);
                lp(g.rows() + r, col) = -g(r, j);
                shift += g(r, j);
                ++col;
            }
            // G' u <= rhs - g_fixed, -G' u <= rhs + g_fixed, with u = x - 1
            b[r] = rhs[r] - g(r, fixed) + shift;
            b[g.rows() + r] = rhs[r] + g(r, fixed) - shift;
        }
        for (std::size_t j = 0; j < m; ++j) {
            lp(2 * g.rows() + j, j) = 1.0;
            b[2 * g.rows() + j] = 2.0;
        }
        if (lp_feasible_leq(lp, b, feas_tol)) return {Feasibility::Unknown};
    }
    return {Feasibility::CertifiedInfeasible};
}

Matrix select_matrix_with_zero_product(const IntervalMatrix& c, const std::vector<double>& y) {
    if (y.size() != c.cols()) throw ValidationError("select_matrix_with_zero_product: dimension mismatch");
    const std::size_t rows = c.rows(), cols = c.cols();
    const std::vector<double> ay = abs_vec(y);
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            num += c.mid()(r, j) * y[j];
            den += c.rad()(r, j) * ay[j];
        }
        double t = den == 0.0 ? 0.0 : num / den;
        if (std::abs(t) > 1.0 + 1e-9)
            throw ValidationError("select_matrix_with_zero_product: 0 not in [C]y for row " +
                                  std::to_string(r));
        t = std::clamp(t, -1.0, 1.0);
        for (std::size_t j = 0; j < cols; ++j) {
            const double sgn_yj = y[j] >= 0.0 ? 1.0 : -1.0;
            out(r, j) = c.mid()(r, j) - t * sgn_yj * c.rad()(r, j);
        }
    }
    return out;
}

namespace {

// Context of one (p, side) search: the improving bound is the single piece of
// mutable state shared along the DFS.
struct SideSearch {
    const SymmetricIntervalMatrix& a;
    const OuterBands& omega;
    std::size_t p;
    Direction side;
    SubmatrixOptions options;

    double mu;
    std::optional<Matrix> witness;
    SearchCounters counters;
    std::vector<ImprovementEvent> log;

    bool upper() const { return side == Direction::Upper; }

    double window_lo() const { return upper() ? mu : omega.bands[p].lo; }
    double window_hi() const { return upper() ? omega.bands[p].hi : mu; }

    double outer_slack() const {
        const double edge = upper() ? omega.bands[p].hi : omega.bands[p].lo;
        return 1e-9 * (1.0 + std::abs(edge));
    }

    // Assemble the full matrix of shape (6): midpoint block for B, a selected
    // zero-product C*, and the vertex block D.
    Matrix assemble(const Decomposition& dec, const Matrix& d_vertex,
                    const std::vector<double>& y) const {
        const std::size_t n = a.dim();
        const Matrix c_star = select_matrix_with_zero_product(dec.c, y);
        Matrix full(n, n);
        const auto& jj = dec.j_indices;
        const auto& kk = dec.complement_indices;
        for (std::size_t r = 0; r < kk.size(); ++r)
            for (std::size_t s = 0; s < kk.size(); ++s) full(kk[r], kk[s]) = dec.b.mid()(r, s);
        for (std::size_t r = 0; r < kk.size(); ++r)
            for (std::size_t s = 0; s < jj.size(); ++s) {
                full(kk[r], jj[s]) = c_star(r, s);
                full(jj[s], kk[r]) = c_star(r, s);
            }
        for (std::size_t r = 0; r < jj.size(); ++r)
            for (std::size_t s = 0; s < jj.size(); ++s) full(jj[r], jj[s]) = d_vertex(r, s);
        return full;
    }

    void process_node(const std::vector<std::size_t>& j_members) {
        const IndexSet j{std::vector<std::size_t>(j_members)};
        const Decomposition dec = decompose(a, j);
        const std::size_t k = j_members.size();
        const std::uint64_t vertices = 1ull << (k - 1);
        const double slack = outer_slack();
        std::uint32_t j_mask = 0;
        for (std::size_t m : j_members) j_mask |= 1u << m;

        for (std::uint64_t gray = 0; gray < vertices; ++gray) {
            const SignVector z = SignVector::from_gray_index(k, gray);
            const Matrix d_vertex = vertex_matrix(dec.d, z, side);
            const EigenPairs ep = sym_eigen(d_vertex);
            ++counters.block_eigs;
            for (std::size_t i = 0; i < k; ++i) {
                const double lambda = ep.values[i];
                if (upper()) {
                    if (!(lambda > mu && lambda <= omega.bands[p].hi + slack)) continue;
                } else {
                    if (!(lambda < mu && lambda >= omega.bands[p].lo - slack)) continue;
                }
                const std::vector<double> y = ep.vector(i);
                if (!interval_matvec(dec.c, y).contains_zero) continue;
                ++counters.candidates_in_window;

                bool direct;
                if (upper()) {
                    direct = p == 0 || lambda < omega.bands[p - 1].lo - slack;
                } else {
                    direct = p + 1 == a.dim() || lambda > omega.bands[p + 1].hi + slack;
                }

                const Matrix full = assemble(dec, d_vertex, y);
                if (direct) {
                    // lambda sits in the p-th eigenvalue set; the assembled
                    // matrix attains it (or slightly better) at position p.
                    const double attained = sym_eigenvalues(full)[p];
                    const double value = upper() ? std::max(lambda, attained)
                                                 : std::min(lambda, attained);
                    mu = value;
                    witness = full;
                    ++counters.improvements;
                    if (options.keep_log)
                        log.push_back({j_mask, gray, static_cast<std::uint32_t>(i), lambda, mu, true});
                } else {
                    const double attained = sym_eigenvalues(full)[p];
                    const bool improves = upper() ? attained > mu : attained < mu;
                    if (improves) {
                        mu = attained;
                        witness = full;
                        ++counters.improvements;
                        if (options.keep_log)
                            log.push_back({j_mask, gray, static_cast<std::uint32_t>(i), lambda, mu, false});
                    }
                }
            }
        }
    }

    // Canonical subset DFS: children drop one element with index greater than
    // the last dropped one, so every nonempty subset is visited exactly once.
    void visit(std::vector<std::size_t>& j_members, std::size_t last_removed_plus1) {
        ++counters.nodes_visited;
        if (window_lo() >= window_hi()) {
            // no open room above/below the current bound anywhere in this subtree
            ++counters.nodes_pruned_window;
            return;
        }
        if (options.mode == SearchMode::BranchBound) {
            const IndexSet j{std::vector<std::size_t>(j_members)};
            const Decomposition dec = decompose(a, j);
            ++counters.certificates;
            if (feasibility_certificate(dec.d, dec.c, {window_lo(), window_hi()}).infeasible()) {
                ++counters.nodes_pruned_infeasible;
                return;
            }
        }
        process_node(j_members);
        if (j_members.size() <= 1) return;
        for (std::size_t pos = 0; pos < j_members.size(); ++pos) {
            const std::size_t e = j_members[pos];
            if (e + 1 <= last_removed_plus1) continue;
            std::vector<std::size_t> child;
            child.reserve(j_members.size() - 1);
            for (std::size_t m : j_members)
                if (m != e) child.push_back(m);
            visit(child, e + 1);
        }
    }
};

} // namespace

SideResult submatrix_search(const SymmetricIntervalMatrix& a, const OuterBands& omega,
                            std::size_t p, Direction side, const BandSet& seed_inner,
                            const SubmatrixOptions& options) {
    const std::size_t n = a.dim();
    if (n == 0) throw ValidationError("submatrix_search: empty matrix");
    if (p >= n) throw ValidationError("submatrix_search: band index out of range");
    if (omega.size() != n || seed_inner.size() != n)
        throw ValidationError("submatrix_search: band count mismatch");
    if (n > options.dim_cap)
        throw CapExceededError("submatrix_search: dimension " + std::to_string(n) +
                               " exceeds cap " + std::to_string(options.dim_cap) +
                               " (about 3^n/2 block eigendecompositions)");

    SideSearch search{a, omega, p, side, options,
                      side == Direction::Upper ? seed_inner.bands[p].hi : seed_inner.bands[p].lo,
                      std::nullopt,
                      {},
                      {}};
    std::vector<std::size_t> root = IndexSet::full(n).members;
    search.visit(root, 0);

    SideResult out;
    out.endpoint = search.mu;
    out.witness = std::move(search.witness);
    out.counters = search.counters;
    out.log = std::move(search.log);
    return out;
}

SubmatrixResult submatrix_enum(const SymmetricIntervalMatrix& a, const OuterBands& omega,
                               const BandSet& seed_inner, const SubmatrixOptions& options,
                               const std::vector<std::size_t>* p_indices,
                               std::optional<Direction> only_side) {
    const std::size_t n = a.dim();
    if (omega.size() != n || seed_inner.size() != n)
        throw ValidationError("submatrix_enum: band count mismatch");

    // Accept outer bands quoted to 4 decimals: reject only violations beyond
    // rounding slack.
    double scale = 0.0;
    for (const Band& b : omega.bands) scale = std::max({scale, std::abs(b.lo), std::abs(b.hi)});
    const double val_tol = std::max(1e-3, 1e-7 * scale);
    for (std::size_t i = 0; i < n; ++i) {
        if (seed_inner.bands[i].lo < omega.bands[i].lo - val_tol ||
            seed_inner.bands[i].hi > omega.bands[i].hi + val_tol)
            throw ValidationError("submatrix_enum: outer bands do not contain the inner seed (band " +
                                  std::to_string(i + 1) + ")");
    }

    std::vector<std::size_t> ps;
    if (p_indices) {
        ps = *p_indices;
        for (std::size_t p : ps)
            if (p >= n) throw ValidationError("submatrix_enum: band index out of range");
    } else {
        ps = IndexSet::full(n).members;
    }

    SubmatrixResult res;
    res.bands = seed_inner;
    res.seed = seed_inner;
    res.upper_sides.resize(n);
    res.lower_sides.resize(n);

    struct Task {
        std::size_t p;
        Direction side;
    };
    std::vector<Task> tasks;
    for (std::size_t p : ps) {
        if (!only_side || *only_side == Direction::Upper) tasks.push_back({p, Direction::Upper});
        if (!only_side || *only_side == Direction::Lower) tasks.push_back({p, Direction::Lower});
    }

    auto run_task = [&](std::size_t ti) {
        const Task& t = tasks[ti];
        SideResult r = submatrix_search(a, omega, t.p, t.side, seed_inner, options);
        if (t.side == Direction::Upper) {
            res.bands.bands[t.p].hi = r.endpoint;
            res.upper_sides[t.p] = std::move(r);
        } else {
            res.bands.bands[t.p].lo = r.endpoint;
            res.lower_sides[t.p] = std::move(r);
        }
    };
    if (options.parallel) {
        parallel_tasks(tasks.size(), run_task);
    } else {
        for (std::size_t ti = 0; ti < tasks.size(); ++ti) run_task(ti);
    }

    for (std::size_t p = 0; p < n; ++p) {
        res.totals += res.upper_sides[p].counters;
        res.totals += res.lower_sides[p].counters;
    }
    return res;
}

void certify_exact(const OuterBands& omega, bool hertz_top, bool hertz_bottom, BandSet& bands) {
    const std::size_t n = bands.size();
    if (omega.size() != n) throw ValidationError("certify_exact: band count mismatch");
    if (n == 0) return;
    bands.exact_hi.assign(n, false);
    bands.exact_lo.assign(n, false);
    bands.exact_hi[0] = hertz_top;
    bands.exact_lo[n - 1] = hertz_bottom;
    for (std::size_t i = 1; i < n; ++i)
        if (omega.bands[i].hi < omega.bands[i - 1].lo) bands.exact_hi[i] = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (omega.bands[i].lo > omega.bands[i + 1].hi) bands.exact_lo[i] = true;
}

std::vector<std::size_t> restrict_to_gap_indices(const OuterBands& omega) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < omega.size(); ++p)
        if (p == 0 || omega.bands[p].hi < omega.bands[p - 1].lo) out.push_back(p);
    return out;
}

std::vector<std::size_t> restrict_to_gap_indices_lower(const OuterBands& omega) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < omega.size(); ++p)
        if (p + 1 == omega.size() || omega.bands[p].lo > omega.bands[p + 1].hi) out.push_back(p);
    return out;
}

} // namespace ispec
