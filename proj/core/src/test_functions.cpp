#include "fracspec/test_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fracspec {

namespace {

constexpr double kPi = std::numbers::pi;

// Physicists' Hermite polynomial by the three-term recurrence.
double hermite(int m, double t) {
    double h0 = 1.0, h1 = 2.0 * t;
    if (m == 0) return h0;
    if (m == 1) return h1;
    for (int k = 1; k < m; ++k) {
        const double h2 = 2.0 * t * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

double hermite_or_zero(int m, double t) { return m < 0 ? 0.0 : hermite(m, t); }

int hermite_degree(const TestFunctionSpec& spec) {
    return static_cast<int>(std::lround(spec.exponent));
}

// Gaussian-envelope magnitude at x, used for the boundary-decay check.
double envelope(const TestFunctionSpec& spec, double x) {
    const double t = (x - spec.center) / spec.scale;
    const double e = std::exp(-kPi * t * t);
    double poly = 1.0;
    if (spec.family == TestFamily::hermite_gaussian) {
        poly = std::abs(hermite(hermite_degree(spec), std::sqrt(2.0 * kPi) * t)) + 1.0;
    }
    return std::abs(spec.amplitude) * poly * e;
}

}  // namespace

TestFamily family_from_name(const std::string& name) {
    if (name == "gaussian") return TestFamily::gaussian;
    if (name == "hermite_gaussian") return TestFamily::hermite_gaussian;
    if (name == "bump") return TestFamily::bump;
    if (name == "sine_gaussian") return TestFamily::sine_gaussian;
    if (name == "power_plus") return TestFamily::power_plus;
    throw ParseError("unknown test function family: " + name);
}

const char* family_name(TestFamily f) {
    switch (f) {
        case TestFamily::gaussian: return "gaussian";
        case TestFamily::hermite_gaussian: return "hermite_gaussian";
        case TestFamily::bump: return "bump";
        case TestFamily::sine_gaussian: return "sine_gaussian";
        case TestFamily::power_plus: return "power_plus";
    }
    return "?";
}

void TestFunctionSpec::validate() const {
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw InvalidInputError("test function: scale must be positive");
    if (!std::isfinite(amplitude) || !std::isfinite(center) || !std::isfinite(modulation))
        throw InvalidInputError("test function: parameters must be finite");
    if (family == TestFamily::bump && !(support_radius > 0.0))
        throw InvalidInputError("bump: support radius must be positive");
    if (family == TestFamily::power_plus && !(exponent >= 0.0))
        throw InvalidInputError("power_plus: exponent must be nonnegative");
    if (family == TestFamily::hermite_gaussian) {
        const int m = hermite_degree(*this);
        if (m < 0 || m > 20) throw InvalidInputError("hermite_gaussian: degree must be in [0, 20]");
    }
}

double TestFunctionSpec::evaluate(double x) const {
    switch (family) {
        case TestFamily::gaussian: {
            const double t = (x - center) / scale;
            return amplitude * std::exp(-kPi * t * t);
        }
        case TestFamily::hermite_gaussian: {
            const double t = (x - center) / scale;
            return amplitude * hermite(hermite_degree(*this), std::sqrt(2.0 * kPi) * t) *
                   std::exp(-kPi * t * t);
        }
        case TestFamily::bump: {
            const double t = (x - center) / support_radius;
            if (std::abs(t) >= 1.0) return 0.0;
            return amplitude * std::exp(1.0 - 1.0 / (1.0 - t * t));
        }
        case TestFamily::sine_gaussian: {
            const double t = (x - center) / scale;
            return amplitude * std::sin(2.0 * kPi * modulation * (x - center)) *
                   std::exp(-kPi * t * t);
        }
        case TestFamily::power_plus: {
            const double y = x - center;
            if (y <= 0.0) return 0.0;
            return amplitude * std::pow(y, exponent);
        }
    }
    return 0.0;
}

double TestFunctionSpec::evaluate_derivative(double x, int order) const {
    if (order == 0) return evaluate(x);
    if (order < 0 || order > 2)
        throw InvalidInputError("closed-form derivatives available for orders 0..2 only");

    switch (family) {
        case TestFamily::gaussian: {
            const double a = scale;
            const double t = (x - center) / a;
            const double g = amplitude * std::exp(-kPi * t * t);
            if (order == 1) return g * (-2.0 * kPi * t) / a;
            return g * (4.0 * kPi * kPi * t * t - 2.0 * kPi) / (a * a);
        }
        case TestFamily::hermite_gaussian: {
            const double a = scale;
            const double t = (x - center) / a;
            const double alpha = std::sqrt(2.0 * kPi);
            const int m = hermite_degree(*this);
            const double e = std::exp(-kPi * t * t);
            const double h = hermite(m, alpha * t);
            const double h1 = hermite_or_zero(m - 1, alpha * t);
            const double h2 = hermite_or_zero(m - 2, alpha * t);
            // d/dt of H_m(alpha t) e^{-pi t^2}, using H_m' = 2m H_{m-1}
            const double d1 = (2.0 * m * alpha * h1 - 2.0 * kPi * t * h) * e;
            if (order == 1) return amplitude * d1 / a;
            const double d2 = (4.0 * m * (m - 1) * alpha * alpha * h2 -
                               8.0 * kPi * m * alpha * t * h1 +
                               (4.0 * kPi * kPi * t * t - 2.0 * kPi) * h) *
                              e;
            return amplitude * d2 / (a * a);
        }
        case TestFamily::bump: {
            const double r = support_radius;
            const double t = (x - center) / r;
            if (std::abs(t) >= 1.0) return 0.0;
            const double s = 1.0 - t * t;
            const double psi = amplitude * std::exp(1.0 - 1.0 / s);
            const double g = -2.0 * t / (s * s);  // d/dt of the exponent
            if (order == 1) return psi * g / r;
            const double gp = -2.0 / (s * s) - 8.0 * t * t / (s * s * s);
            return psi * (g * g + gp) / (r * r);
        }
        case TestFamily::sine_gaussian: {
            const double a = scale;
            const double t = (x - center) / a;
            const double om = 2.0 * kPi * modulation;
            const double e = std::exp(-kPi * t * t);
            const double sn = std::sin(om * (x - center));
            const double cs = std::cos(om * (x - center));
            const double ep = -2.0 * kPi * t / a;  // E'/E
            if (order == 1) return amplitude * e * (om * cs + sn * ep);
            const double epp = (4.0 * kPi * kPi * t * t - 2.0 * kPi) / (a * a);  // E''/E
            return amplitude * e * (-om * om * sn + 2.0 * om * cs * ep + sn * epp);
        }
        case TestFamily::power_plus: {
            const double y = x - center;
            if (order == 1) {
                if (y < 0.0) return 0.0;
                if (y == 0.0) return exponent == 1.0 ? 0.5 * amplitude : 0.0;
                return amplitude * exponent * std::pow(y, exponent - 1.0);
            }
            if (y <= 0.0 || exponent == 1.0) return 0.0;
            return amplitude * exponent * (exponent - 1.0) * std::pow(y, exponent - 2.0);
        }
    }
    return 0.0;
}

double TestFunctionSpec::effective_radius() const {
    switch (family) {
        case TestFamily::bump:
            return support_radius;
        case TestFamily::power_plus:
            return std::numeric_limits<double>::infinity();
        case TestFamily::hermite_gaussian:
            return scale * (3.25 + 0.6 * hermite_degree(*this) + 1.0);
        default:
            // exp(-pi t^2) < 1e-14 once |t| > sqrt(14 ln 10 / pi) = 3.203
            return scale * 3.25;
    }
}

namespace {

void check_domain(const TestFunctionSpec& spec, const GridSpec& grid) {
    const double L = grid.half_width();
    switch (spec.family) {
        case TestFamily::bump:
            if (spec.center - spec.support_radius < -L || spec.center + spec.support_radius > L)
                throw DomainTooSmallError("bump support is not contained in the grid domain");
            return;
        case TestFamily::power_plus:
            return;  // windowed by its users; no decay requirement
        default: {
            const double floor = 1e-14 * std::max(std::abs(spec.amplitude), 1e-300);
            if (envelope(spec, -L) > floor || envelope(spec, L) > floor)
                throw DomainTooSmallError(
                    "test function has not decayed below 1e-14 at the domain boundary");
            return;
        }
    }
}

}  // namespace

SampledFunction sample(const TestFunctionSpec& spec, const GridSpec& grid) {
    spec.validate();
    check_domain(spec, grid);
    std::vector<double> v(static_cast<std::size_t>(grid.points()));
    for (int j = 0; j < grid.points(); ++j) v[static_cast<std::size_t>(j)] = spec.evaluate(grid.point(j));
    return SampledFunction(grid, std::move(v));
}

SampledFunction sample_derivative(const TestFunctionSpec& spec, const GridSpec& grid, int order) {
    spec.validate();
    check_domain(spec, grid);
    std::vector<double> v(static_cast<std::size_t>(grid.points()));
    for (int j = 0; j < grid.points(); ++j)
        v[static_cast<std::size_t>(j)] = spec.evaluate_derivative(grid.point(j), order);
    return SampledFunction(grid, std::move(v));
}

}  // namespace fracspec
