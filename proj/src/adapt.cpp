#include "splinedict/adapt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "splinedict/errors.hpp"

namespace splinedict {

SampledSignal::SampledSignal(std::vector<double> v, double c_, double d_)
    : values(std::move(v)), c(c_), d(d_) {
    if (values.size() < 6)
        fail(errc::signal_too_short,
             "need at least 6 samples, got " + std::to_string(values.size()));
    if (!(d > c))
        fail(errc::non_increasing, "signal interval needs d > c");
}

std::vector<double> SampledSignal::grid() const {
    const std::size_t n = values.size() - 1;
    const double step = h();
    std::vector<double> x(values.size());
    for (std::size_t k = 0; k <= n; ++k)
        x[k] = c + static_cast<double>(k) * step;
    x.front() = c;
    x.back() = d;
    return x;
}

double SampledSignal::norm() const {
    double s = 0.0;
    for (double v : values)
        s += v * v;
    return std::sqrt(s);
}

namespace {

// Discrete curvature at samples i = 1..n-1: forward first difference, central
// second difference, variant-dependent denominator.  A zero Minus
// denominator yields 0 and bumps the counter; a negative one is evaluated as
// sign(den)*|den|^{3/2}.
std::vector<double> curvature_sequence(const SampledSignal& sig, CurvatureVariant variant,
                                       std::size_t& nonfinite) {
    const std::size_t n = sig.size() - 1;
    const double h = sig.h();
    std::vector<double> kap(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        const double df = (sig.values[i + 1] - sig.values[i]) / h;
        const double ddf =
            (sig.values[i + 1] + sig.values[i - 1] - 2.0 * sig.values[i]) / (h * h);
        double den = (variant == CurvatureVariant::Minus) ? 1.0 - df * df : 1.0 + df * df;
        den = (den < 0.0 ? -1.0 : 1.0) * std::pow(std::abs(den), 1.5);
        double v = (den == 0.0) ? std::numeric_limits<double>::infinity() : ddf / den;
        if (!std::isfinite(v)) {
            ++nonfinite;
            v = 0.0;
        }
        kap[i - 1] = v;
    }
    return kap;
}

} // namespace

CurvatureKnots curvature_knots(const SampledSignal& sig, CurvatureVariant variant) {
    const std::size_t n = sig.size() - 1;
    const double h = sig.h();
    CurvatureKnots out;
    const std::vector<double> kap = curvature_sequence(sig, variant, out.nonfinite_count);
    for (std::size_t k = 2; k + 3 <= n; ++k) {
        const double c0 = std::abs(kap[k - 1]);
        const double c1 = std::abs(kap[k]);
        const double c2 = std::abs(kap[k + 1]);
        if (c0 < c1 && c1 > c2)
            out.knots.push_back(sig.c + static_cast<double>(k + 1) * h);
    }
    std::sort(out.knots.begin(), out.knots.end());
    out.knots.erase(std::unique(out.knots.begin(), out.knots.end()), out.knots.end());
    return out;
}

std::vector<std::pair<double, double>> curvature_profile(const SampledSignal& sig,
                                                         CurvatureVariant variant) {
    const std::size_t n = sig.size() - 1;
    const double h = sig.h();
    std::size_t ignored = 0;
    const std::vector<double> kap = curvature_sequence(sig, variant, ignored);
    std::vector<std::pair<double, double>> out;
    out.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        out.emplace_back(sig.c + static_cast<double>(i) * h, std::abs(kap[i - 1]));
    return out;
}

Partition adapt_partition(const SampledSignal& sig, std::size_t level, CurvatureVariant variant) {
    if (level < 1)
        fail(errc::bad_count, "subdivision level must be at least 1");
    CurvatureKnots ck = curvature_knots(sig, variant);
    std::vector<double> pts;
    pts.reserve(ck.knots.size() + 2);
    pts.push_back(sig.c);
    for (double t : ck.knots)
        if (t != sig.c && t != sig.d)
            pts.push_back(t);
    pts.push_back(sig.d);
    return subdivide(Partition{std::move(pts)}, level);
}

} // namespace splinedict
