#include "splinedict/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splinedict/errors.hpp"

namespace splinedict {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::non_increasing: return "NonIncreasing";
    case errc::too_few_points: return "TooFewPoints";
    case errc::non_divisible: return "NonDivisible";
    case errc::bad_count: return "BadCount";
    case errc::endpoint_mismatch: return "EndpointMismatch";
    case errc::union_mismatch: return "UnionMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::x_out_of_domain: return "XOutOfDomain";
    case errc::signal_too_short: return "SignalTooShort";
    case errc::parse_error: return "ParseError";
    case errc::io_failure: return "IOFailure";
    }
    return "UnknownError";
}

Partition::Partition(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2)
        fail(errc::too_few_points, "a partition needs at least 2 points, got " + std::to_string(points_.size()));
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        if (!(points_[i] < points_[i + 1]))
            fail(errc::non_increasing,
                 "points must be strictly increasing; offending pair at index " + std::to_string(i));
    }
}

Partition Partition::uniform(double c, double d, double step) {
    if (!(d > c))
        fail(errc::non_increasing, "interval endpoints must satisfy c < d");
    if (!(step > 0.0))
        fail(errc::non_divisible, "step must be positive");
    const double ratio = (d - c) / step;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded)
        fail(errc::non_divisible, "(d-c)/step = " + std::to_string(ratio) + " is not a positive integer");
    const auto segments = static_cast<std::size_t>(rounded);
    std::vector<double> pts(segments + 1);
    pts.front() = c;
    for (std::size_t j = 1; j < segments; ++j) pts[j] = c + static_cast<double>(j) * step;
    pts.back() = d;
    return Partition(std::move(pts));
}

std::vector<Partition> round_robin_subpartitions(const Partition& p, std::size_t n) {
    const std::size_t interior = p.interior_count();
    if (n < 1 || n > interior + 1)
        fail(errc::bad_count, "subpartition count must lie in [1, N+1] = [1, " +
                                  std::to_string(interior + 1) + "], got " + std::to_string(n));
    std::vector<Partition> subs;
    subs.reserve(n);
    const auto& pts = p.points();
    for (std::size_t j = 1; j <= n; ++j) {
        std::vector<double> sel;
        sel.push_back(p.c());
        for (std::size_t k = 1; k <= interior; ++k)
            if (k % n == j - 1) sel.push_back(pts[k]);
        sel.push_back(p.d());
        subs.emplace_back(std::move(sel));
    }
    return subs;
}

Partition union_partitions(std::span<const Partition> parts) {
    if (parts.empty())
        fail(errc::too_few_points, "cannot union zero partitions");
    const double c = parts.front().c();
    const double d = parts.front().d();
    std::vector<double> merged;
    for (const auto& p : parts) {
        if (p.c() != c || p.d() != d)
            fail(errc::endpoint_mismatch, "all partitions must share the same interval endpoints");
        merged.insert(merged.end(), p.points().begin(), p.points().end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return Partition(std::move(merged));
}

Partition subdivide(const Partition& p, std::size_t level) {
    if (level < 1)
        fail(errc::bad_count, "subdivision level must be >= 1");
    if (level == 1) return p;
    const auto& pts = p.points();
    std::vector<double> out;
    out.reserve(pts.size() + (pts.size() - 1) * (level - 1));
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        out.push_back(pts[k]);
        const double gap = pts[k + 1] - pts[k];
        for (std::size_t t = 1; t < level; ++t) {
            const double x = pts[k] + static_cast<double>(t) * gap / static_cast<double>(level);
            // guard against collapse when gaps approach the ulp scale
            if (x > out.back() && x < pts[k + 1]) out.push_back(x);
        }
    }
    out.push_back(pts.back());
    return Partition(std::move(out));
}

ExtendedPartition::ExtendedPartition(const Partition& p, int order) : order_(order) {
    if (order < 1)
        fail(errc::bad_count, "spline order must be >= 1");
    const auto m = static_cast<std::size_t>(order);
    const auto& pts = p.points();
    knots_.reserve(2 * m + p.interior_count());
    knots_.insert(knots_.end(), m, p.c());
    knots_.insert(knots_.end(), pts.begin() + 1, pts.end() - 1);
    knots_.insert(knots_.end(), m, p.d());
}

} // namespace splinedict
