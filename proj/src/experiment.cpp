#include "splinedict/experiment.hpp"

#include <chrono>

#include "splinedict/dictionary.hpp"
#include "splinedict/errors.hpp"
#include "splinedict/format.hpp"
#include "splinedict/signalio.hpp"

namespace splinedict {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AtomicDecomposition approx_on(const SplineDictionary& dict, const SampledSignal& sig,
                              double tol) {
    const std::vector<double> grid = sig.grid();
    const SampledMatrix m = sample(dict, grid);
    const PursuitProblem prob = PursuitProblem::build(m, sig, tol);
    return sparse_approximate(prob);
}

} // namespace

void RunConfig::validate() const {
    if (order < 1)
        fail(errc::bad_count, "order must be at least 1");
    if (level < 1)
        fail(errc::bad_count, "subdivision level must be at least 1");
    if (subpartitions < 1)
        fail(errc::bad_count, "subpartition count must be at least 1");
    if (!(tol_fraction > 0.0 && tol_fraction < 1.0))
        fail(errc::bad_count, "tolerance fraction must lie in (0, 1)");
    if (samples < 6)
        fail(errc::signal_too_short, "need at least 6 samples");
    if (interval_set && !(d > c))
        fail(errc::non_increasing, "interval needs d > c");
}

SampledSignal resolve_signal(const RunConfig& cfg) {
    if (cfg.signal == "chirp") {
        if (cfg.interval_set && (cfg.c != 0.0 || cfg.d != 8.0))
            fail(errc::bad_count, "the chirp is defined on [0, 8]");
        return gen_chirp(cfg.samples);
    }
    if (cfg.signal == "phased") {
        const double c = cfg.interval_set ? cfg.c : 0.0;
        const double d = cfg.interval_set ? cfg.d : 4.0;
        const PiecewiseConstantPhase phase = random_phase(c, d, 8, cfg.seed);
        return gen_phased_cosine(cfg.samples, phase, c, d);
    }
    const double c = cfg.interval_set ? cfg.c : 0.0;
    const double d = cfg.interval_set ? cfg.d : 1.0;
    return load_signal(cfg.signal, c, d);
}

ApproxResult run_approx(const SampledSignal& sig, const Partition& p, int order,
                        std::size_t subpartitions, double tol_fraction) {
    if (!(tol_fraction > 0.0 && tol_fraction < 1.0))
        fail(errc::bad_count, "tolerance fraction must lie in (0, 1)");
    ApproxResult res{p};
    res.signal_norm = sig.norm();
    res.tol = tol_fraction * res.signal_norm;

    const SplineDictionary basis(p, round_robin_subpartitions(p, 1), order);
    const SplineDictionary dict(p, round_robin_subpartitions(p, subpartitions), order);
    res.basis_atoms = basis.atom_count();
    res.dict_atoms = dict.atom_count();

    auto t0 = std::chrono::steady_clock::now();
    res.basis = approx_on(basis, sig, res.tol);
    res.basis_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    res.dict = approx_on(dict, sig, res.tol);
    res.dict_seconds = seconds_since(t0);
    return res;
}

SingleResult run_single(const SampledSignal& sig, const Partition& p, int order,
                        std::size_t subpartitions, double tol_fraction) {
    if (!(tol_fraction > 0.0 && tol_fraction < 1.0))
        fail(errc::bad_count, "tolerance fraction must lie in (0, 1)");
    SingleResult res;
    const SplineDictionary dict(p, round_robin_subpartitions(p, subpartitions), order);
    res.atoms = dict.atom_count();
    const auto t0 = std::chrono::steady_clock::now();
    res.dec = approx_on(dict, sig, tol_fraction * sig.norm());
    res.seconds = seconds_since(t0);
    return res;
}

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& os) {
    os << "label,subpartitions,atoms,k,residual_norm,tol,seconds\n";
    for (const ReportRow& r : rows)
        os << r.label << ',' << r.subpartitions << ',' << r.atoms << ',' << r.k << ','
           << format_double(r.residual) << ',' << format_double(r.tol) << ','
           << format_double(r.seconds) << '\n';
}

} // namespace splinedict
