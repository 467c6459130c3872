#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "splinedict/adapt.hpp"
#include "splinedict/partition.hpp"
#include "splinedict/pursuit.hpp"

namespace splinedict {

/// One full run: signal choice, knot adaptation, and approximation settings.
struct RunConfig {
    std::string signal = "chirp"; ///< "chirp", "phased", or a file path
    double c = 0.0;
    double d = 1.0;
    bool interval_set = false; ///< explicit --interval overrides per-signal defaults
    std::size_t samples = 2049;
    int order = 4;
    std::size_t level = 9;
    std::size_t subpartitions = 10;
    CurvatureVariant variant = CurvatureVariant::Minus;
    double tol_fraction = 0.01;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Builtin generator or one-value-per-line file, with per-signal default
/// intervals (chirp [0,8], phased [0,4], files [0,1]).
SampledSignal resolve_signal(const RunConfig& cfg);

struct ApproxResult {
    Partition partition;
    double tol = 0.0;
    double signal_norm = 0.0;
    std::size_t basis_atoms = 0;
    std::size_t dict_atoms = 0;
    AtomicDecomposition basis;
    AtomicDecomposition dict;
    double basis_seconds = 0.0;
    double dict_seconds = 0.0;
};

/// Sparse-approximate the signal on the basis (single subpartition) and on
/// the n-subpartition dictionary of the same partition, with
/// tol = tol_fraction * ||signal||.
ApproxResult run_approx(const SampledSignal& sig, const Partition& p, int order,
                        std::size_t subpartitions, double tol_fraction);

/// One dictionary run only (used by the subpartition sweep).
struct SingleResult {
    std::size_t atoms = 0;
    AtomicDecomposition dec;
    double seconds = 0.0;
};

SingleResult run_single(const SampledSignal& sig, const Partition& p, int order,
                        std::size_t subpartitions, double tol_fraction);

struct ReportRow {
    std::string label;
    std::size_t subpartitions = 0;
    std::size_t atoms = 0;
    std::size_t k = 0;
    double residual = 0.0;
    double tol = 0.0;
    double seconds = 0.0;
};

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& os);

} // namespace splinedict
