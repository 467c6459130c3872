#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace splinedict {

/// Strictly increasing knot sequence x_0 < x_1 < ... < x_{N+1} on a compact
/// interval [c,d], with c = x_0 and d = x_{N+1}.  N counts interior knots.
class Partition {
public:
    explicit Partition(std::vector<double> points);

    /// Equidistant partition of [c,d] with step b; (d-c)/b must be a
    /// positive integer (relative tolerance 1e-9).
    static Partition uniform(double c, double d, double step);

    const std::vector<double>& points() const noexcept { return points_; }
    double c() const noexcept { return points_.front(); }
    double d() const noexcept { return points_.back(); }

    /// N, the number of interior knots.
    std::size_t interior_count() const noexcept { return points_.size() - 2; }
    std::size_t size() const noexcept { return points_.size(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<double> points_;
};

/// Splits p into n subpartitions, the j-th (1-based j) keeping interior
/// knots x_k with k mod n == j-1 plus both endpoints.  Their union is p.
std::vector<Partition> round_robin_subpartitions(const Partition& p, std::size_t n);

/// Sorted, exactly-deduplicated union of partitions sharing the same endpoints.
Partition union_partitions(std::span<const Partition> parts);

/// Inserts level-1 equally spaced knots into every gap; level = 1 is the identity.
Partition subdivide(const Partition& p, std::size_t level);

/// Knot vector {y_i} of length 2m+N for a spline order m: the interior knots
/// of a partition framed by m coincident copies of each endpoint.
class ExtendedPartition {
public:
    ExtendedPartition(const Partition& p, int order);

    const std::vector<double>& knots() const noexcept { return knots_; }
    double knot(std::size_t i) const { return knots_[i]; }
    int order() const noexcept { return order_; }
    std::size_t interior_count() const noexcept { return knots_.size() - 2 * static_cast<std::size_t>(order_); }
    double c() const noexcept { return knots_.front(); }
    double d() const noexcept { return knots_.back(); }

    /// m + N, the dimension of the spline space.
    std::size_t basis_size() const noexcept { return interior_count() + static_cast<std::size_t>(order_); }

private:
    std::vector<double> knots_;
    int order_;
};

inline ExtendedPartition clamped_extension(const Partition& p, int order) {
    return ExtendedPartition(p, order);
}

} // namespace splinedict
