#include "splinedict/signalio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "splinedict/errors.hpp"
#include "splinedict/format.hpp"

namespace splinedict {

namespace {

// Sample fn on the canonical grid of [c,d] so values line up with
// SampledSignal::grid() exactly.
template <typename Fn>
SampledSignal sample_function(std::size_t samples, double c, double d, Fn&& fn) {
    if (samples < 6)
        fail(errc::signal_too_short, "need at least 6 samples, got " + std::to_string(samples));
    const double h = (d - c) / static_cast<double>(samples - 1);
    std::vector<double> v(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        double x = c + static_cast<double>(k) * h;
        if (k == 0)
            x = c;
        if (k + 1 == samples)
            x = d;
        v[k] = fn(x);
    }
    return SampledSignal(std::move(v), c, d);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

double chirp(double x) {
    return std::cos(2.0 * std::numbers::pi * x * x);
}

SampledSignal gen_chirp(std::size_t samples) {
    return sample_function(samples, 0.0, 8.0, chirp);
}

double PiecewiseConstantPhase::value(double x) const {
    const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    return levels[static_cast<std::size_t>(it - breakpoints.begin())];
}

PiecewiseConstantPhase random_phase(double c, double d, std::size_t pieces, std::uint64_t seed) {
    if (pieces < 1)
        fail(errc::bad_count, "phase needs at least one piece");
    if (!(d > c))
        fail(errc::non_increasing, "phase interval needs d > c");
    std::mt19937_64 rng(seed);
    PiecewiseConstantPhase phase;
    phase.breakpoints.resize(pieces - 1);
    for (double& b : phase.breakpoints)
        b = c + (d - c) * uniform01(rng);
    std::sort(phase.breakpoints.begin(), phase.breakpoints.end());
    phase.levels.resize(pieces);
    for (double& l : phase.levels)
        l = 2.0 * std::numbers::pi * uniform01(rng);
    return phase;
}

SampledSignal gen_phased_cosine(std::size_t samples, const PiecewiseConstantPhase& phase,
                                double c, double d) {
    if (phase.levels.size() != phase.breakpoints.size() + 1)
        fail(errc::bad_count, "phase needs one level per piece");
    return sample_function(samples, c, d, [&](double x) {
        return std::cos(8.0 * std::numbers::pi * x + phase.value(x));
    });
}

SampledSignal gen_phased_cosine(std::size_t samples, std::uint64_t seed) {
    const PiecewiseConstantPhase phase = random_phase(0.0, 4.0, 8, seed);
    return gen_phased_cosine(samples, phase, 0.0, 4.0);
}

SampledSignal load_signal(const std::filesystem::path& path, double c, double d) {
    std::ifstream in(path);
    if (!in)
        fail(errc::io_failure, "cannot open " + path.string() + " for reading");
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        double v = 0.0;
        const char* first = line.data() + b;
        const char* last = line.data() + e + 1;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last)
            fail(errc::parse_error,
                 path.string() + ":" + std::to_string(lineno) + ": not a number: '" +
                     line.substr(b, e - b + 1) + "'");
        values.push_back(v);
    }
    if (in.bad())
        fail(errc::io_failure, "read error on " + path.string());
    if (values.empty())
        fail(errc::parse_error, path.string() + ":1: no samples found");
    return SampledSignal(std::move(values), c, d);
}

void save_signal(const SampledSignal& sig, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        fail(errc::io_failure, "cannot open " + path.string() + " for writing");
    for (double v : sig.values)
        out << format_double(v) << '\n';
    if (!out)
        fail(errc::io_failure, "write error on " + path.string());
}

void save_json(const nlohmann::json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        fail(errc::io_failure, "cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
    if (!out)
        fail(errc::io_failure, "write error on " + path.string());
}

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        fail(errc::io_failure, "cannot open " + path.string() + " for reading");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse_error, path.string() + ": " + e.what());
    }
    return j;
}

void save_partition(const Partition& p, const std::filesystem::path& path) {
    nlohmann::json j;
    j["c"] = p.c();
    j["d"] = p.d();
    j["points"] = p.points();
    save_json(j, path);
}

Partition load_partition(const std::filesystem::path& path) {
    const nlohmann::json j = load_json(path);
    if (!j.contains("points") || !j["points"].is_array())
        fail(errc::parse_error, path.string() + ": missing 'points' array");
    std::vector<double> pts;
    try {
        pts = j["points"].get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, path.string() + ": " + e.what());
    }
    return Partition(std::move(pts));
}

nlohmann::json decomposition_to_json(const AtomicDecomposition& dec,
                                     const std::string& dictionary_ref) {
    nlohmann::json j;
    j["atoms"] = dec.gamma;
    j["coefficients"] = dec.coeffs;
    j["residual_norm"] = dec.residual_norm;
    j["k"] = dec.k();
    j["stage_log"] = {{"oomp_atoms", dec.stage_log.oomp_atoms},
                      {"oomp_residual", dec.stage_log.oomp_residual},
                      {"stagnated", dec.stage_log.stagnated},
                      {"oomp_residual_history", dec.stage_log.oomp_residual_history},
                      {"total_swaps", dec.stage_log.total_swaps},
                      {"total_pruned", dec.stage_log.total_pruned},
                      {"refine_rounds", dec.stage_log.refine_rounds}};
    if (!dictionary_ref.empty())
        j["dictionary"] = dictionary_ref;
    return j;
}

void save_decomposition(const AtomicDecomposition& dec, const std::filesystem::path& path,
                        const std::string& dictionary_ref) {
    save_json(decomposition_to_json(dec, dictionary_ref), path);
}

void write_reconstruction_csv(std::span<const double> grid, std::span<const double> signal,
                              std::span<const double> approx, std::ostream& os) {
    if (grid.size() != signal.size() || grid.size() != approx.size())
        fail(errc::bad_count, "reconstruction columns differ in length");
    os << "x,signal,approximation,residual\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        os << format_double(grid[i]) << ',' << format_double(signal[i]) << ','
           << format_double(approx[i]) << ',' << format_double(signal[i] - approx[i]) << '\n';
}

} // namespace splinedict
