#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "splinedict/partition.hpp"

namespace splinedict {

/// Uniformly sampled signal: values[k] = f(c + k*h), k = 0..n, h = (d-c)/n.
/// The three-point curvature stencil needs at least 6 samples.
struct SampledSignal {
    SampledSignal(std::vector<double> values, double c, double d);

    std::size_t size() const noexcept { return values.size(); }
    double h() const noexcept {
        return (d - c) / static_cast<double>(values.size() - 1);
    }
    /// Sample abscissas; first and last are exactly c and d.
    std::vector<double> grid() const;
    double norm() const;

    std::vector<double> values;
    double c;
    double d;
};

/// Discrete curvature denominator: (1 - f'^2)^{3/2} as written in the
/// knot-placement scheme, or the standard (1 + f'^2)^{3/2}.
enum class CurvatureVariant { Minus, Plus };

struct CurvatureKnots {
    std::vector<double> knots; ///< sorted, deduplicated, strictly interior
    /// Times the Minus denominator collapsed to zero (curvature treated
    /// as 0 there).  Negative denominators are evaluated as a sign-preserving
    /// real power and do not count.
    std::size_t nonfinite_count = 0;
};

/// Scan k = 2..n-3 and emit c + (k+1)h wherever the discrete curvature
/// magnitudes at offsets 0,1,2 satisfy |c0| < |c1| and |c1| > |c2|.
CurvatureKnots curvature_knots(const SampledSignal& sig, CurvatureVariant variant);

/// (x, |curvature|) pairs at the interior samples, for diagnostics.
std::vector<std::pair<double, double>> curvature_profile(const SampledSignal& sig,
                                                         CurvatureVariant variant);

/// curvature_knots united with {c, d}, then each gap subdivided with
/// level-1 extra knots.  Point count is (#knots + 1)*level + 1.
Partition adapt_partition(const SampledSignal& sig, std::size_t level,
                          CurvatureVariant variant = CurvatureVariant::Minus);

} // namespace splinedict
