#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "splinedict/partition.hpp"

namespace splinedict {

/// The B-spline basis {B_{m,j}} of the spline space over a clamped extended
/// partition: m + N locally supported, non-negative functions that sum to one
/// on [c,d] and interpolate at both endpoints.
class SplineBasis {
public:
    SplineBasis(Partition p, int order);

    int order() const noexcept { return ext_.order(); }
    std::size_t size() const noexcept { return ext_.basis_size(); }
    const Partition& partition() const noexcept { return partition_; }
    const ExtendedPartition& extended() const noexcept { return ext_; }

    double evaluate(std::size_t j, double x) const { return eval_bspline(ext_, j, x); }

    /// Evaluates every basis function at x in one pass; out.size() == size().
    void evaluate_all(double x, std::span<double> out) const;

    /// Support interval [y_j, y_{j+m}] of the j-th function (0-based j).
    std::pair<double, double> support(std::size_t j) const;

    /// Order-recursion evaluation of B_{m,j} at x, 0-based j in [0, m+N).
    /// Knot-denominator 0/0 terms are taken as zero; the last order-1
    /// indicator is closed at d so the basis interpolates both endpoints.
    static double eval_bspline(const ExtendedPartition& ext, std::size_t j, double x);

private:
    Partition partition_;
    ExtendedPartition ext_;
};

/// Dense pointwise evaluations: rows follow the grid, columns the functions.
struct SampledMatrix {
    Eigen::MatrixXd values;
    std::vector<double> grid;
};

SampledMatrix sample(const SplineBasis& basis, std::span<const double> grid);

/// CSV export with the abscissa as first column.
void write_sampled_csv(const SampledMatrix& m, std::ostream& os);

} // namespace splinedict
