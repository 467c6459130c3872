#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "splinedict/adapt.hpp"
#include "splinedict/errors.hpp"

using namespace splinedict;

namespace {

SampledSignal sampled(double c, double d, std::size_t count, double (*fn)(double)) {
    std::vector<double> v(count);
    const double h = (d - c) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k)
        v[k] = fn(c + static_cast<double>(k) * h);
    return SampledSignal(std::move(v), c, d);
}

// strict local maxima of the shifted |curvature| triple, recomputed
// independently of the library's scan
std::vector<double> oracle_knots(const std::vector<double>& f, double c, double h,
                                 bool minus_variant) {
    const std::size_t n = f.size() - 1;
    auto kappa = [&](std::size_t i) {
        const double df = (f[i + 1] - f[i]) / h;
        const double ddf = (f[i + 1] + f[i - 1] - 2.0 * f[i]) / (h * h);
        const double den = minus_variant ? 1.0 - df * df : 1.0 + df * df;
        const double dv = (den < 0.0 ? -1.0 : 1.0) * std::pow(std::abs(den), 1.5);
        if (dv == 0.0)
            return 0.0;
        const double v = ddf / dv;
        return std::isfinite(v) ? v : 0.0;
    };
    std::vector<double> out;
    for (std::size_t k = 2; k + 3 <= n; ++k)
        if (std::abs(kappa(k)) < std::abs(kappa(k + 1)) &&
            std::abs(kappa(k + 1)) > std::abs(kappa(k + 2)))
            out.push_back(c + static_cast<double>(k + 1) * h);
    return out;
}

} // namespace

TEST_CASE("constant and straight line signals produce no knots") {
    const SampledSignal flat(std::vector<double>(64, 2.5), 0.0, 1.0);
    CHECK(curvature_knots(flat, CurvatureVariant::Minus).knots.empty());
    CHECK(curvature_knots(flat, CurvatureVariant::Plus).knots.empty());

    // 65 samples put the abscissas on a dyadic grid, so the sampled line is
    // exact and its second differences vanish identically
    const SampledSignal line = sampled(0.0, 1.0, 65, +[](double x) { return 0.5 * x + 1.0; });
    CHECK(curvature_knots(line, CurvatureVariant::Minus).knots.empty());
    CHECK(curvature_knots(line, CurvatureVariant::Plus).knots.empty());
}

TEST_CASE("sine curvature peaks are located near the extrema of its second derivative") {
    const auto fn = +[](double x) { return std::sin(2.0 * std::numbers::pi * x); };
    const SampledSignal sig = sampled(0.0, 1.0, 257, fn);
    const double h = sig.h();
    const CurvatureKnots ck = curvature_knots(sig, CurvatureVariant::Plus);
    CHECK(ck.nonfinite_count == 0);
    REQUIRE(!ck.knots.empty());
    // peaks of |curvature| sit near x = 0.25 and 0.75
    for (double t : ck.knots) {
        const double nearest = std::abs(t - 0.25) < std::abs(t - 0.75) ? 0.25 : 0.75;
        CHECK(std::abs(t - nearest) <= 2.0 * h);
    }
    // both clusters are present
    CHECK(std::any_of(ck.knots.begin(), ck.knots.end(),
                      [&](double t) { return std::abs(t - 0.25) <= 2.0 * h; }));
    CHECK(std::any_of(ck.knots.begin(), ck.knots.end(),
                      [&](double t) { return std::abs(t - 0.75) <= 2.0 * h; }));
}

TEST_CASE("scan agrees with an independent oracle on oscillatory data") {
    const auto fn = +[](double x) { return std::cos(3.0 * x) + 0.3 * std::sin(11.0 * x); };
    const SampledSignal sig = sampled(-1.0, 2.0, 301, fn);
    for (bool minus : {true, false}) {
        const auto variant = minus ? CurvatureVariant::Minus : CurvatureVariant::Plus;
        const CurvatureKnots ck = curvature_knots(sig, variant);
        CHECK(ck.knots == oracle_knots(sig.values, sig.c, sig.h(), minus));
    }
}

TEST_CASE("knot count identity after subdivision") {
    const auto fn = +[](double x) { return std::cos(3.0 * x) + 0.3 * std::sin(11.0 * x); };
    const SampledSignal sig = sampled(0.0, 3.0, 301, fn);
    for (std::size_t level : {1u, 2u, 5u, 9u}) {
        const std::size_t t = curvature_knots(sig, CurvatureVariant::Minus).knots.size();
        const Partition p = adapt_partition(sig, level, CurvatureVariant::Minus);
        CHECK(p.size() == (t + 1) * level + 1);
        CHECK(p.c() == sig.c);
        CHECK(p.d() == sig.d);
    }
}

TEST_CASE("constant signal partitions into uniform pieces") {
    const SampledSignal flat(std::vector<double>(64, 1.0), 0.0, 1.0);
    const Partition p = adapt_partition(flat, 4, CurvatureVariant::Minus);
    REQUIRE(p.size() == 5);
    CHECK(p.points()[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p.points()[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.points()[3] == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("shift equivariance of the standard variant") {
    const auto fn = +[](double x) { return std::sin(5.0 * x) + 0.2 * x * x; };
    const double shift = 2.75;
    const SampledSignal base = sampled(0.0, 2.0, 401, fn);
    std::vector<double> moved_values = base.values;
    const SampledSignal moved(std::move(moved_values), 0.0 + shift, 2.0 + shift);
    const auto k0 = curvature_knots(base, CurvatureVariant::Plus).knots;
    const auto k1 = curvature_knots(moved, CurvatureVariant::Plus).knots;
    REQUIRE(k0.size() == k1.size());
    for (std::size_t i = 0; i < k0.size(); ++i)
        CHECK(k1[i] - k0[i] == doctest::Approx(shift).epsilon(1e-12));
}

TEST_CASE("adding a constant leaves the knot set unchanged") {
    const auto fn = +[](double x) { return std::sin(5.0 * x); };
    const SampledSignal base = sampled(0.0, 2.0, 401, fn);
    std::vector<double> lifted = base.values;
    for (double& v : lifted)
        v += 0.625; // exactly representable, so the differences are bit-identical
    const SampledSignal shifted(std::move(lifted), 0.0, 2.0);
    for (auto variant : {CurvatureVariant::Minus, CurvatureVariant::Plus})
        CHECK(curvature_knots(base, variant).knots == curvature_knots(shifted, variant).knots);
}

TEST_CASE("signals shorter than the stencil are rejected") {
    CHECK_THROWS_AS(SampledSignal(std::vector<double>(5, 0.0), 0.0, 1.0), Error);
    try {
        SampledSignal s(std::vector<double>(3, 0.0), 0.0, 1.0);
    } catch (const Error& e) {
        CHECK(e.code() == errc::signal_too_short);
    }
    CHECK_NOTHROW(SampledSignal(std::vector<double>(6, 0.0), 0.0, 1.0));
}

TEST_CASE("steep slopes flip the minus variant denominator and are counted") {
    // |f'| = 2 > 1 everywhere except near the fold; the minus variant sees
    // negative denominators yet stays finite via the signed power
    const auto fn = +[](double x) { return 2.0 * std::abs(x - 0.5); };
    const SampledSignal sig = sampled(0.0, 1.0, 65, fn);
    const CurvatureKnots minus = curvature_knots(sig, CurvatureVariant::Minus);
    const CurvatureKnots plus = curvature_knots(sig, CurvatureVariant::Plus);
    CHECK(plus.nonfinite_count == 0);
    // every interior sample of the ramp has df = +/-2 except across the fold
    CHECK(minus.knots.size() <= 2);
    CHECK(plus.knots.size() <= 2);

    // a slope of exactly one makes the minus denominator vanish
    const auto ramp = +[](double x) { return x < 0.5 ? x : 1.0 - x; };
    const SampledSignal tent = sampled(0.0, 1.0, 65, ramp);
    const CurvatureKnots hit = curvature_knots(tent, CurvatureVariant::Minus);
    CHECK(hit.nonfinite_count > 0);
    CHECK(curvature_knots(tent, CurvatureVariant::Plus).nonfinite_count == 0);
}

TEST_CASE("curvature profile matches the scan samples") {
    const auto fn = +[](double x) { return std::cos(4.0 * x); };
    const SampledSignal sig = sampled(0.0, 2.0, 101, fn);
    const auto profile = curvature_profile(sig, CurvatureVariant::Plus);
    REQUIRE(profile.size() == sig.size() - 2);
    CHECK(profile.front().first == doctest::Approx(sig.c + sig.h()).epsilon(1e-15));
    for (const auto& [x, mag] : profile)
        CHECK(mag >= 0.0);
}
