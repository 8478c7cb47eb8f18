#include "ispec/local_search.hpp"

#include "ispec/errors.hpp"
#include "ispec/threading.hpp"

#include <cmath>

namespace ispec {

LocalHalf local_bounds(const SymmetricIntervalMatrix& a, Direction dir, double eps_improve) {
    const std::size_t n = a.dim();
    LocalHalf out;
    out.values.resize(n);
    out.iterations.assign(n, 0);
    out.witnesses.resize(n);
    out.history.resize(n);
    const double cap = std::pow(2.0, static_cast<double>(n));
    const bool upper = dir == Direction::Upper;

    parallel_tasks(n, [&](std::size_t i) {
        Matrix current = a.mid();
        EigenPairs ep = sym_eigen(current);
        double best = ep.values[i];
        Matrix witness = current;
        std::vector<double> history{best};
        int iters = 0;
        for (;;) {
            const SignVector z = SignVector::of(ep.vector(i));
            const Matrix candidate = vertex_matrix(a, z, dir);
            const EigenPairs cand_ep = sym_eigen(candidate);
            const double val = cand_ep.values[i];
            ++iters;
            const double thresh = eps_improve * (1.0 + std::abs(val));
            const bool improved = upper ? val > best + thresh : val < best - thresh;
            if (!improved) break;
            best = val;
            witness = candidate;
            history.push_back(val);
            ep = cand_ep;
            if (iters > cap)
                throw ValidationError("local_bounds: iteration cap 2^n exceeded");
        }
        out.values[i] = best;
        out.iterations[i] = iters;
        out.witnesses[i] = std::move(witness);
        out.history[i] = std::move(history);
    });
    return out;
}

LocalResult local_band_set(const SymmetricIntervalMatrix& a, double eps_improve) {
    LocalResult res;
    res.upper = local_bounds(a, Direction::Upper, eps_improve);
    res.lower = local_bounds(a, Direction::Lower, eps_improve);
    res.bands = BandSet(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        res.bands.bands[i] = {res.lower.values[i], res.upper.values[i]};
    return res;
}

} // namespace ispec
