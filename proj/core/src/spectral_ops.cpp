#include "fracspec/spectral_ops.hpp"

#include <cmath>
#include <numbers>

#include "fracspec/transform.hpp"

namespace fracspec {

namespace {
constexpr double kPi = std::numbers::pi;

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
}  // namespace

std::complex<double> symbol(double xi, double mu, Side side) {
    if (!(mu >= 0.0) || !std::isfinite(mu))
        throw InvalidOrderError("symbol: order must be nonnegative");
    if (mu == 0.0) return {1.0, 0.0};
    if (xi == 0.0) return {0.0, 0.0};
    const double magnitude = std::pow(std::abs(2.0 * kPi * xi), mu);
    const double sign_factor = (side == Side::left) ? 1.0 : -1.0;
    const double angle = sign_factor * mu * 0.5 * kPi * sign_of(xi);
    return std::polar(magnitude, angle);
}

SampledFunction spectral_rl_derivative(const SampledFunction& u, double mu, Side side) {
    if (!(mu >= 0.0) || !std::isfinite(mu))
        throw InvalidOrderError("spectral_rl_derivative: order must be nonnegative");
    if (mu == 0.0) return u;
    return apply_multiplier(u, [mu, side](double xi) { return symbol(xi, mu, side); });
}

SampledFunction spectral_rl_integral(const SampledFunction& u, double sigma, Side side) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw InvalidOrderError("spectral_rl_integral: order must be positive");

    // The xi = 0 bin of the inverse multiplier is singular, so the input may
    // not carry mean: c_0 = dx * sum_j u_j must be negligible against ||u||.
    double mean_acc = 0.0;
    for (double v : u.values()) mean_acc += v;
    const double c0 = std::abs(mean_acc * u.grid().spacing());
    const double norm = l2_norm(u);
    if (c0 > 1e-8 * norm)
        throw NonzeroMeanError("spectral_rl_integral: input has nonzero mean (|c_0| = " +
                               std::to_string(c0) + ", ||u|| = " + std::to_string(norm) + ")");

    const double sign_factor = (side == Side::left) ? 1.0 : -1.0;
    return apply_multiplier(u, [sigma, sign_factor](double xi) -> std::complex<double> {
        if (xi == 0.0) return {0.0, 0.0};
        const double magnitude = std::pow(std::abs(2.0 * kPi * xi), -sigma);
        const double angle = -sign_factor * sigma * 0.5 * kPi * sign_of(xi);
        return std::polar(magnitude, angle);
    });
}

}  // namespace fracspec
