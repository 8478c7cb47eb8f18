// Command line front end: eigenvalue / singular value set approximation for
// symmetric interval matrices. Subcommands: inner, outer, singular, verify,
// bench. Prints one JSON document per run on stdout; bench also prints a
// human-readable table on stderr. Exit codes: 0 ok, 2 validation error,
// 3 dimension cap exceeded.

#include "CLI11.hpp"

#include "ispec/eigen.hpp"
#include "ispec/errors.hpp"
#include "ispec/harness.hpp"
#include "ispec/io.hpp"
#include "ispec/outer.hpp"
#include "ispec/vertex_enum.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using ispec::json;

struct CommonArgs {
    std::string file;
    std::string method = "vertex";
    std::string mode = "bb";
    std::string outer_file;
    std::string side = "both";
    int p_index = 0; // 1-based; 0 = all
    std::size_t cap = 0;
    bool gaps_only = false;
    bool witnesses = false;
};

ispec::RunOptions make_run_options(const CommonArgs& args, const ispec::ProblemFile& pf) {
    ispec::RunOptions opts;
    opts.method = ispec::method_from_name(args.method);
    if (args.mode == "direct") opts.mode = ispec::SearchMode::Direct;
    else if (args.mode == "bb") opts.mode = ispec::SearchMode::BranchBound;
    else throw ispec::ValidationError("unknown mode '" + args.mode + "' (expected direct|bb)");
    if (args.cap > 0) {
        opts.vertex_cap = args.cap;
        opts.submatrix_cap = args.cap;
    }
    opts.gaps_only = args.gaps_only;
    if (args.side == "upper") opts.side = ispec::Direction::Upper;
    else if (args.side == "lower") opts.side = ispec::Direction::Lower;
    else if (args.side != "both")
        throw ispec::ValidationError("unknown side '" + args.side + "'");
    if (args.p_index > 0) opts.p_index = static_cast<std::size_t>(args.p_index - 1);
    if (!args.outer_file.empty()) opts.outer = ispec::load_outer_bands(args.outer_file);
    else if (pf.outer) opts.outer = pf.outer;
    return opts;
}

json report_to_json(const ispec::RunReport& rep, bool witnesses) {
    json doc = ispec::bands_to_json(rep.bands);
    doc["outer"] = ispec::bands_to_json(rep.outer_used)["bands"];
    doc["outer_supplied"] = rep.outer_supplied;
    doc["sharpness"] = rep.sharpness_value;
    doc["time_seconds"] = rep.wall_seconds;
    if (!rep.seed.bands.empty()) doc["seed"] = ispec::bands_to_json(rep.seed)["bands"];
    if (!rep.iterations_upper.empty()) {
        doc["iterations"]["upper"] = rep.iterations_upper;
        doc["iterations"]["lower"] = rep.iterations_lower;
    }
    json counters;
    counters["nodes_visited"] = rep.counters.nodes_visited;
    counters["nodes_pruned_window"] = rep.counters.nodes_pruned_window;
    counters["nodes_pruned_infeasible"] = rep.counters.nodes_pruned_infeasible;
    counters["certificates"] = rep.counters.certificates;
    counters["block_eigendecompositions"] = rep.counters.block_eigs;
    counters["candidates_in_window"] = rep.counters.candidates_in_window;
    counters["improvements"] = rep.counters.improvements;
    doc["counters"] = std::move(counters);
    if (witnesses) {
        json wit;
        json up = json::array(), lo = json::array();
        for (const auto& w : rep.witness_upper)
            up.push_back(w ? ispec::matrix_to_json(*w) : json(nullptr));
        for (const auto& w : rep.witness_lower)
            lo.push_back(w ? ispec::matrix_to_json(*w) : json(nullptr));
        wit["upper"] = std::move(up);
        wit["lower"] = std::move(lo);
        doc["witnesses"] = std::move(wit);
    }
    return doc;
}

int cmd_inner(const CommonArgs& args) {
    const ispec::ProblemFile pf = ispec::ProblemFile::load(args.file);
    const ispec::SymmetricIntervalMatrix a = pf.symmetric();
    const ispec::RunOptions opts = make_run_options(args, pf);
    const ispec::RunReport rep = ispec::run_eigen_bands(a, opts);
    json doc = report_to_json(rep, args.witnesses);
    doc["command"] = "inner";
    doc["method"] = args.method;
    doc["n"] = a.dim();
    std::cout << doc.dump() << "\n";
    return 0;
}

int cmd_outer(const std::string& file, bool tighten, std::size_t cap) {
    const ispec::ProblemFile pf = ispec::ProblemFile::load(file);
    const ispec::SymmetricIntervalMatrix a = pf.symmetric();
    ispec::OuterBands omega = ispec::outer_bounds(a);
    if (tighten)
        omega = ispec::tighten_outer(omega,
                                     ispec::vertex_enum_bounds(a, cap > 0 ? cap : 25).bands);
    json doc;
    doc["command"] = "outer";
    doc["n"] = a.dim();
    doc["tightened"] = tighten;
    doc["bands"] = ispec::bands_to_json(omega)["bands"];
    std::cout << doc.dump() << "\n";
    return 0;
}

int cmd_singular(const CommonArgs& args) {
    const ispec::ProblemFile pf = ispec::ProblemFile::load(args.file);
    const ispec::IntervalMatrix a = pf.rectangular();
    const ispec::RunOptions opts = make_run_options(args, pf);
    const ispec::SingularReport rep = ispec::singular_bounds(a, opts);
    json doc;
    doc["command"] = "singular";
    doc["method"] = args.method;
    doc["rows"] = a.rows();
    doc["cols"] = a.cols();
    doc["singular_bands"] = ispec::bands_to_json(rep.sigma);
    doc["embedding"] = report_to_json(rep.full, args.witnesses);
    std::cout << doc.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& file, std::size_t samples, std::uint64_t seed,
               std::size_t cap) {
    const ispec::ProblemFile pf = ispec::ProblemFile::load(file);
    const ispec::SymmetricIntervalMatrix a = pf.symmetric();
    const std::size_t n = a.dim();

    const ispec::VertexEnumResult vertex = ispec::vertex_enum_bounds(a, cap > 0 ? cap : 25);
    ispec::OuterBands omega = ispec::outer_bounds(a);
    omega = ispec::tighten_outer(omega, vertex.bands);
    const ispec::BandSet mc = ispec::monte_carlo_inner(a, samples, seed);

    double scale = 0.0;
    for (const auto& b : omega.bands) scale = std::max({scale, std::abs(b.lo), std::abs(b.hi)});
    const double tol = 1e-9 * (1.0 + scale);
    const bool contained = omega.contains(mc, tol);
    const bool hertz_top_ok = mc.bands[0].hi <= vertex.bands.bands[0].hi + tol;
    const bool hertz_bottom_ok = mc.bands[n - 1].lo >= vertex.bands.bands[n - 1].lo - tol;

    json doc;
    doc["command"] = "verify";
    doc["n"] = n;
    doc["samples"] = samples;
    doc["seed"] = seed;
    doc["monte_carlo_bands"] = ispec::bands_to_json(mc)["bands"];
    doc["outer"] = ispec::bands_to_json(omega)["bands"];
    doc["vertex_inner"] = ispec::bands_to_json(vertex.bands)["bands"];
    doc["oracle_inside_outer"] = contained;
    doc["oracle_below_exact_top"] = hertz_top_ok;
    doc["oracle_above_exact_bottom"] = hertz_bottom_ok;
    std::cout << doc.dump() << "\n";
    return contained && hertz_top_ok && hertz_bottom_ok ? 0 : 2;
}

int cmd_bench(const std::vector<std::size_t>& n_list, const std::vector<double>& radius_list,
              std::size_t trials, std::uint64_t seed, const std::vector<std::string>& methods,
              const std::string& mode, const std::vector<std::size_t>& rows_list) {
    ispec::BenchOptions opts;
    opts.n_list = n_list;
    opts.radius_list = radius_list;
    opts.trials = trials;
    opts.seed = seed;
    opts.rows_list = rows_list;
    if (mode == "direct") opts.mode = ispec::SearchMode::Direct;
    else if (mode == "bb") opts.mode = ispec::SearchMode::BranchBound;
    else throw ispec::ValidationError("unknown mode '" + mode + "'");
    if (!methods.empty()) {
        opts.methods.clear();
        for (const auto& m : methods) opts.methods.push_back(ispec::method_from_name(m));
    }

    const std::vector<ispec::BenchCell> cells = ispec::run_benchmark(opts);

    std::fprintf(stderr, "%4s %4s %8s %5s", "m", "n", "R", "trial");
    for (const auto m : opts.methods)
        std::fprintf(stderr, " %12s %9s", (ispec::method_name(m) + " shrp").c_str(), "time");
    std::fprintf(stderr, "\n");
    for (const auto& c : cells) {
        std::fprintf(stderr, "%4zu %4zu %8g %5zu", c.rows, c.n, c.radius, c.trial);
        for (std::size_t i = 0; i < c.methods.size(); ++i)
            std::fprintf(stderr, " %12.4f %8.2fs", c.sharpness_values[i], c.times[i]);
        std::fprintf(stderr, "\n");
    }

    json rows = json::array();
    for (const auto& c : cells) {
        json row;
        if (c.rows > 0) row["rows"] = c.rows;
        row["n"] = c.n;
        row["radius"] = c.radius;
        row["trial"] = c.trial;
        row["cell_seed"] = c.seed;
        for (std::size_t i = 0; i < c.methods.size(); ++i) {
            row["sharpness"][ispec::method_name(c.methods[i])] = c.sharpness_values[i];
            row["time_seconds"][ispec::method_name(c.methods[i])] = c.times[i];
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["command"] = "bench";
    doc["seed"] = seed;
    doc["trials"] = trials;
    doc["cells"] = std::move(rows);
    std::cout << doc.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inner and outer approximations of eigenvalue/singular value sets of "
                 "symmetric interval matrices"};
    app.require_subcommand(1);

    CommonArgs inner_args;
    CLI::App* inner = app.add_subcommand("inner", "Inner eigenvalue bands of a symmetric problem");
    inner->add_option("--method", inner_args.method, "local|vertex|submatrix")
        ->default_val("vertex");
    inner->add_option("--mode", inner_args.mode, "submatrix search mode: direct|bb")
        ->default_val("bb");
    inner->add_option("--outer", inner_args.outer_file, "outer bands JSON file");
    inner->add_flag("--gaps-only", inner_args.gaps_only,
                    "submatrix: only bands separated from their neighbor");
    inner->add_option("--side", inner_args.side, "upper|lower|both")->default_val("both");
    inner->add_option("--p", inner_args.p_index, "restrict submatrix search to band INDEX (1-based)");
    inner->add_option("--cap", inner_args.cap, "dimension cap override");
    inner->add_flag("--witnesses", inner_args.witnesses, "include witness matrices in output");
    inner->add_option("file", inner_args.file, "problem JSON file")->required();

    std::string outer_file;
    bool outer_tighten = false;
    std::size_t outer_cap = 0;
    CLI::App* outer = app.add_subcommand("outer", "Baseline outer eigenvalue bands");
    outer->add_flag("--tighten", outer_tighten, "replace the two Hertz-exact endpoints");
    outer->add_option("--cap", outer_cap, "vertex enumeration cap for --tighten");
    outer->add_option("file", outer_file, "problem JSON file")->required();

    CommonArgs singular_args;
    CLI::App* singular = app.add_subcommand("singular", "Singular value bands of a rectangular problem");
    singular->add_option("--method", singular_args.method, "local|vertex|submatrix")
        ->default_val("vertex");
    singular->add_option("--mode", singular_args.mode, "direct|bb")->default_val("bb");
    singular->add_option("--outer", singular_args.outer_file,
                         "outer bands file (q or m+n entries)");
    singular->add_flag("--gaps-only", singular_args.gaps_only, "see inner");
    singular->add_option("--side", singular_args.side, "upper|lower|both")->default_val("both");
    singular->add_option("--p", singular_args.p_index, "restrict to band INDEX (1-based)");
    singular->add_option("--cap", singular_args.cap, "dimension cap override");
    singular->add_flag("--witnesses", singular_args.witnesses, "include witnesses");
    singular->add_option("file", singular_args.file, "problem JSON file")->required();

    std::string verify_file;
    std::size_t verify_samples = 10000;
    std::uint64_t verify_seed = 1;
    std::size_t verify_cap = 0;
    CLI::App* verify = app.add_subcommand("verify", "Monte Carlo oracle sandwich check");
    verify->add_option("--samples", verify_samples, "sample count")->default_val(10000);
    verify->add_option("--seed", verify_seed, "RNG seed")->default_val(1);
    verify->add_option("--cap", verify_cap, "vertex enumeration cap");
    verify->add_option("file", verify_file, "problem JSON file")->required();

    std::vector<std::size_t> bench_n, bench_rows;
    std::vector<double> bench_radius;
    std::size_t bench_trials = 1;
    std::uint64_t bench_seed = 1;
    std::vector<std::string> bench_methods;
    std::string bench_mode = "bb";
    CLI::App* bench = app.add_subcommand("bench", "Random-instance benchmark table");
    bench->add_option("--n", bench_n, "dimension list")->required()->delimiter(',');
    bench->add_option("--radius", bench_radius, "radius list")->required()->delimiter(',');
    bench->add_option("--trials", bench_trials, "trials per cell")->default_val(1);
    bench->add_option("--seed", bench_seed, "base seed")->default_val(1);
    bench->add_option("--methods", bench_methods, "subset of local,vertex,submatrix")
        ->delimiter(',');
    bench->add_option("--mode", bench_mode, "direct|bb")->default_val("bb");
    bench->add_option("--rows", bench_rows,
                      "row-count list; presence switches to the singular value table")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (inner->parsed()) return cmd_inner(inner_args);
        if (outer->parsed()) return cmd_outer(outer_file, outer_tighten, outer_cap);
        if (singular->parsed()) return cmd_singular(singular_args);
        if (verify->parsed()) return cmd_verify(verify_file, verify_samples, verify_seed, verify_cap);
        if (bench->parsed())
            return cmd_bench(bench_n, bench_radius, bench_trials, bench_seed, bench_methods,
                             bench_mode, bench_rows);
    } catch (const ispec::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ispec::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
