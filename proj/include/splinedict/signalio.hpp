#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "splinedict/adapt.hpp"
#include "splinedict/partition.hpp"
#include "splinedict/pursuit.hpp"

namespace splinedict {

/// cos(2 pi x^2)
double chirp(double x);

/// Chirp sampled on [0, 8].
SampledSignal gen_chirp(std::size_t samples);

/// Piecewise constant phase; value(x) is the level of the piece containing x
/// (breakpoints belong to the piece on their right).
struct PiecewiseConstantPhase {
    std::vector<double> breakpoints; ///< sorted, strictly inside the interval
    std::vector<double> levels;      ///< one per piece: breakpoints.size() + 1
    double value(double x) const;
};

/// Seeded phase: pieces-1 uniform breakpoints in (c,d), levels uniform in
/// [0, 2*pi).  Breakpoints are drawn before levels; identical seeds give
/// identical phases on any platform.
PiecewiseConstantPhase random_phase(double c, double d, std::size_t pieces, std::uint64_t seed);

/// cos(8 pi x + phase(x)) sampled on [c, d].
SampledSignal gen_phased_cosine(std::size_t samples, const PiecewiseConstantPhase& phase,
                                double c, double d);

/// Default phased cosine: interval [0, 4], 8 random phase pieces.
SampledSignal gen_phased_cosine(std::size_t samples, std::uint64_t seed);

/// Text signal format: one numeric value per line.
SampledSignal load_signal(const std::filesystem::path& path, double c, double d);
void save_signal(const SampledSignal& sig, const std::filesystem::path& path);

void save_partition(const Partition& p, const std::filesystem::path& path);
Partition load_partition(const std::filesystem::path& path);

nlohmann::json decomposition_to_json(const AtomicDecomposition& dec,
                                     const std::string& dictionary_ref = {});
void save_decomposition(const AtomicDecomposition& dec, const std::filesystem::path& path,
                        const std::string& dictionary_ref = {});

/// Columns: x, signal, approximation, residual.
void write_reconstruction_csv(std::span<const double> grid, std::span<const double> signal,
                              std::span<const double> approx, std::ostream& os);

void save_json(const nlohmann::json& j, const std::filesystem::path& path);
nlohmann::json load_json(const std::filesystem::path& path);

} // namespace splinedict
