#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splinedict/adapt.hpp"
#include "splinedict/dictionary.hpp"
#include "splinedict/errors.hpp"
#include "splinedict/experiment.hpp"
#include "splinedict/format.hpp"
#include "splinedict/pursuit.hpp"
#include "splinedict/signalio.hpp"

namespace fs = std::filesystem;
using namespace splinedict;

namespace {

struct CliState {
    RunConfig cfg;
    std::vector<double> interval;
    std::string curvature = "minus";
    std::string partition_file;
    std::string out_dir = ".";
    std::size_t n_min = 2;
    std::size_t n_max = 12;
};

void add_signal_flags(CLI::App* cmd, CliState& st) {
    cmd->add_option("--signal", st.cfg.signal,
                    "builtin signal (chirp, phased) or path to a one-value-per-line file");
    cmd->add_option("--interval", st.interval, "sampling interval c d")->expected(2);
    cmd->add_option("--samples", st.cfg.samples, "sample count for builtin signals");
    cmd->add_option("--seed", st.cfg.seed, "seed for the phased cosine's random phase");
}

void add_adapt_flags(CLI::App* cmd, CliState& st) {
    cmd->add_option("--level", st.cfg.level, "subdivision level (extra knots per gap = level-1)");
    cmd->add_option("--curvature", st.curvature, "curvature denominator variant")
        ->check(CLI::IsMember({"minus", "standard"}));
}

void finish_config(CliState& st) {
    if (!st.interval.empty()) {
        st.cfg.c = st.interval[0];
        st.cfg.d = st.interval[1];
        st.cfg.interval_set = true;
    }
    st.cfg.variant =
        st.curvature == "standard" ? CurvatureVariant::Plus : CurvatureVariant::Minus;
    st.cfg.validate();
}

fs::path ensure_out_dir(const CliState& st) {
    fs::path dir(st.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        fail(errc::io_failure, "cannot create output directory " + dir.string());
    return dir;
}

void write_curvature_csv(const SampledSignal& sig, CurvatureVariant variant,
                         const fs::path& path) {
    std::ofstream out(path);
    if (!out)
        fail(errc::io_failure, "cannot open " + path.string() + " for writing");
    out << "x,curvature_magnitude\n";
    for (const auto& [x, mag] : curvature_profile(sig, variant))
        out << format_double(x) << ',' << format_double(mag) << '\n';
}

// Partition from --partition when given, otherwise adapted from the signal
// (writing partition.json and curvature.csv next to the other outputs).
Partition obtain_partition(const CliState& st, const SampledSignal& sig, const fs::path& dir) {
    if (!st.partition_file.empty())
        return load_partition(st.partition_file);
    const CurvatureKnots ck = curvature_knots(sig, st.cfg.variant);
    if (ck.nonfinite_count > 0)
        std::cerr << "warning: curvature denominator collapsed at " << ck.nonfinite_count
                  << " samples (consider --curvature standard)\n";
    const Partition p = adapt_partition(sig, st.cfg.level, st.cfg.variant);
    save_partition(p, dir / "partition.json");
    write_curvature_csv(sig, st.cfg.variant, dir / "curvature.csv");
    return p;
}

void write_recon_csv(const SampledSignal& sig, const SplineDictionary& dict,
                     const AtomicDecomposition& dec, const fs::path& path) {
    const std::vector<double> grid = sig.grid();
    const std::vector<double> approx = reconstruct(dec, dict, grid);
    std::ofstream out(path);
    if (!out)
        fail(errc::io_failure, "cannot open " + path.string() + " for writing");
    write_reconstruction_csv(grid, sig.values, approx, out);
}

int cmd_gen(CliState& st) {
    finish_config(st);
    const fs::path dir = ensure_out_dir(st);
    const SampledSignal sig = resolve_signal(st.cfg);
    save_signal(sig, dir / "signal.txt");
    std::cout << sig.size() << " samples on [" << format_double(sig.c) << ", "
              << format_double(sig.d) << "] -> " << (dir / "signal.txt").string() << '\n';
    return 0;
}

int cmd_adapt(CliState& st) {
    finish_config(st);
    const fs::path dir = ensure_out_dir(st);
    const SampledSignal sig = resolve_signal(st.cfg);
    const Partition p = obtain_partition(st, sig, dir);
    std::cout << p.size() << " knots (" << p.interior_count() << " interior) -> "
              << (dir / "partition.json").string() << '\n';
    return 0;
}

int cmd_dict(CliState& st) {
    finish_config(st);
    const fs::path dir = ensure_out_dir(st);
    std::optional<Partition> p;
    if (!st.partition_file.empty()) {
        p = load_partition(st.partition_file);
    } else {
        const SampledSignal sig = resolve_signal(st.cfg);
        p = obtain_partition(st, sig, dir);
    }
    const SplineDictionary dict(*p, round_robin_subpartitions(*p, st.cfg.subpartitions),
                                st.cfg.order);
    save_json(dictionary_metadata(dict), dir / "dictionary.json");
    std::cout << dict.atom_count() << " atoms spanning a space of dimension "
              << dict.space_dimension() << " -> " << (dir / "dictionary.json").string() << '\n';
    return 0;
}

int cmd_approx(CliState& st) {
    finish_config(st);
    const fs::path dir = ensure_out_dir(st);
    const SampledSignal sig = resolve_signal(st.cfg);
    const Partition p = obtain_partition(st, sig, dir);
    const ApproxResult res =
        run_approx(sig, p, st.cfg.order, st.cfg.subpartitions, st.cfg.tol_fraction);

    const SplineDictionary basis(p, round_robin_subpartitions(p, 1), st.cfg.order);
    const SplineDictionary dict(p, round_robin_subpartitions(p, st.cfg.subpartitions),
                                st.cfg.order);
    save_json(dictionary_metadata(dict), dir / "dictionary.json");
    save_decomposition(res.basis, dir / "decomposition_basis.json", "basis n=1");
    save_decomposition(res.dict, dir / "decomposition_dict.json", "dictionary.json");
    write_recon_csv(sig, basis, res.basis, dir / "recon_basis.csv");
    write_recon_csv(sig, dict, res.dict, dir / "recon_dict.csv");

    std::vector<ReportRow> rows;
    rows.push_back({"basis", 1, res.basis_atoms, res.basis.k(), res.basis.residual_norm, res.tol,
                    res.basis_seconds});
    rows.push_back({"dictionary", st.cfg.subpartitions, res.dict_atoms, res.dict.k(),
                    res.dict.residual_norm, res.tol, res.dict_seconds});
    std::ofstream report(dir / "report.csv");
    if (!report)
        fail(errc::io_failure, "cannot open report.csv for writing");
    write_report_csv(rows, report);

    std::cout << "partition: " << p.size() << " knots\n"
              << "basis:      " << res.basis_atoms << " atoms, K=" << res.basis.k()
              << ", residual=" << format_double(res.basis.residual_norm) << " ("
              << format_double(res.basis_seconds) << " s)\n"
              << "dictionary: " << res.dict_atoms << " atoms, K=" << res.dict.k()
              << ", residual=" << format_double(res.dict.residual_norm) << " ("
              << format_double(res.dict_seconds) << " s)\n"
              << "tol: " << format_double(res.tol) << '\n';
    const bool met = res.basis.residual_norm <= res.tol && res.dict.residual_norm <= res.tol;
    if (!met)
        std::cerr << "tolerance not met\n";
    return met ? 0 : 1;
}

int cmd_sweep(CliState& st) {
    finish_config(st);
    if (st.n_min < 1 || st.n_max < st.n_min)
        fail(errc::bad_count, "sweep needs 1 <= n-min <= n-max");
    const fs::path dir = ensure_out_dir(st);
    const SampledSignal sig = resolve_signal(st.cfg);
    const Partition p = obtain_partition(st, sig, dir);

    std::vector<ReportRow> rows;
    const double tol = st.cfg.tol_fraction * sig.norm();
    bool met = true;
    std::size_t best_k = 0;
    std::size_t best_n = 0;
    for (std::size_t n = st.n_min; n <= st.n_max; ++n) {
        const SingleResult r = run_single(sig, p, st.cfg.order, n, st.cfg.tol_fraction);
        rows.push_back({n == 1 ? "basis" : "dictionary", n, r.atoms, r.dec.k(),
                        r.dec.residual_norm, tol, r.seconds});
        met = met && r.dec.residual_norm <= tol;
        if (best_n == 0 || r.dec.k() < best_k) {
            best_k = r.dec.k();
            best_n = n;
        }
        std::cout << "n=" << n << ": " << r.atoms << " atoms, K=" << r.dec.k()
                  << ", residual=" << format_double(r.dec.residual_norm) << " ("
                  << format_double(r.seconds) << " s)\n";
    }
    std::ofstream report(dir / "report.csv");
    if (!report)
        fail(errc::io_failure, "cannot open report.csv for writing");
    write_report_csv(rows, report);
    std::cout << "lowest K=" << best_k << " at n=" << best_n << '\n';
    if (!met)
        std::cerr << "tolerance not met\n";
    return met ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse spline approximation with redundant B-spline dictionaries"};
    app.require_subcommand(1);
    CliState st;

    CLI::App* gen = app.add_subcommand("gen", "generate a builtin signal and save it");
    add_signal_flags(gen, st);
    gen->add_option("--out", st.out_dir, "output directory");

    CLI::App* adapt = app.add_subcommand("adapt", "place knots at curvature maxima");
    add_signal_flags(adapt, st);
    add_adapt_flags(adapt, st);
    adapt->add_option("--out", st.out_dir, "output directory");

    CLI::App* dict = app.add_subcommand("dict", "build a redundant dictionary");
    add_signal_flags(dict, st);
    add_adapt_flags(dict, st);
    dict->add_option("--order", st.cfg.order, "spline order (degree + 1)");
    dict->add_option("--subpartitions", st.cfg.subpartitions, "number of subpartitions");
    dict->add_option("--partition", st.partition_file, "partition JSON instead of adapting");
    dict->add_option("--out", st.out_dir, "output directory");

    CLI::App* approx = app.add_subcommand("approx", "adapt, build, and sparse-approximate");
    add_signal_flags(approx, st);
    add_adapt_flags(approx, st);
    approx->add_option("--order", st.cfg.order, "spline order (degree + 1)");
    approx->add_option("--subpartitions", st.cfg.subpartitions, "number of subpartitions");
    approx->add_option("--partition", st.partition_file, "partition JSON instead of adapting");
    approx->add_option("--tol", st.cfg.tol_fraction, "residual tolerance as a fraction of ||f||");
    approx->add_option("--out", st.out_dir, "output directory");

    CLI::App* sweep = app.add_subcommand("sweep", "approximate across a range of subpartition counts");
    add_signal_flags(sweep, st);
    add_adapt_flags(sweep, st);
    sweep->add_option("--order", st.cfg.order, "spline order (degree + 1)");
    sweep->add_option("--partition", st.partition_file, "partition JSON instead of adapting");
    sweep->add_option("--tol", st.cfg.tol_fraction, "residual tolerance as a fraction of ||f||");
    sweep->add_option("--n-min", st.n_min, "smallest subpartition count");
    sweep->add_option("--n-max", st.n_max, "largest subpartition count");
    sweep->add_option("--out", st.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(st);
        if (adapt->parsed())
            return cmd_adapt(st);
        if (dict->parsed())
            return cmd_dict(st);
        if (approx->parsed())
            return cmd_approx(st);
        if (sweep->parsed())
            return cmd_sweep(st);
    } catch (const Error& e) {
        std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
