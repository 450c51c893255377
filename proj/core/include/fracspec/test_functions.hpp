#pragma once

#include <string>

#include "fracspec/grid.hpp"

namespace fracspec {

enum class TestFamily { gaussian, hermite_gaussian, bump, sine_gaussian, power_plus };

TestFamily family_from_name(const std::string& name);
const char* family_name(TestFamily f);

/// Closed-form test function on the line. Families (b = center, a = scale,
/// c = amplitude, w = modulation frequency, beta = exponent, r = radius):
///
///   gaussian          c * exp(-pi ((x-b)/a)^2)
///   hermite_gaussian  c * H_m(sqrt(2 pi) (x-b)/a) * exp(-pi ((x-b)/a)^2),
///                     m = round(beta); for a = 1, b = 0 these are
///                     eigenfunctions of the transform with eigenvalue (-i)^m
///   bump              c * exp(1 - 1/(1 - t^2)) for t = (x-b)/r, |t| < 1;
///                     0 outside (compact support [b-r, b+r])
///   sine_gaussian     c * sin(2 pi w (x-b)) * exp(-pi ((x-b)/a)^2)
///                     (odd about b: exactly zero mean when b = 0)
///   power_plus        c * max(0, x-b)^beta
struct TestFunctionSpec {
    TestFamily family = TestFamily::gaussian;
    double center = 0.0;
    double scale = 1.0;
    double amplitude = 1.0;
    double modulation = 1.0;
    double exponent = 1.0;
    double support_radius = 1.0;

    /// Pointwise evaluation of the family member.
    double evaluate(double x) const;

    /// Closed-form derivative of order 0, 1 or 2.
    double evaluate_derivative(double x, int order) const;

    /// Radius around `center` outside which the function is below 1e-14 of
    /// its amplitude (exact support for bump, whole line for power_plus).
    double effective_radius() const;

    void validate() const;
};

/// Evaluate the family at every grid node. Throws DomainTooSmallError when
/// the support/decay requirement fails on the given grid: a bump must have
/// its support inside [-L, L]; Gaussian-envelope families must have decayed
/// below 1e-14 at |x| = L. power_plus is exempt (its users window results).
SampledFunction sample(const TestFunctionSpec& spec, const GridSpec& grid);

/// Grid samples of the order-th derivative (order <= 2), same checks as
/// sample(). For power_plus with beta = 1 the first derivative is the unit
/// step, sampled as 1/2 at the kink.
SampledFunction sample_derivative(const TestFunctionSpec& spec, const GridSpec& grid, int order);

}  // namespace fracspec
