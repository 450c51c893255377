#pragma once

#include <complex>

#include "fracspec/fractional_order.hpp"
#include "fracspec/grid.hpp"

namespace fracspec {

/// Principal-branch power of the derivative symbol:
///
///   symbol(xi, mu, left)  = (+2 pi i xi)^mu = |2 pi xi|^mu e^{+i mu pi sign(xi)/2}
///   symbol(xi, mu, right) = (-2 pi i xi)^mu = |2 pi xi|^mu e^{-i mu pi sign(xi)/2}
///
/// with the continuous extensions symbol(0, mu, .) = 0 for mu > 0 and
/// symbol(., 0, .) = 1. Satisfies the group law in mu and
/// symbol(-xi, mu, s) = conj(symbol(xi, mu, s)).
std::complex<double> symbol(double xi, double mu, Side side);

/// Fractional derivative as a Fourier multiplier: idft(symbol * dft(u)).
/// mu = 0 returns the input unchanged. Requires smooth decaying input;
/// insufficient decay surfaces as the idft symmetry error.
SampledFunction spectral_rl_derivative(const SampledFunction& u, double mu, Side side);

/// Fractional integral as the inverse multiplier, with the k = 0 bin set to
/// zero. The input must be zero-mean: |c_0| <= 1e-8 ||u|| is enforced and a
/// violation throws NonzeroMeanError (the |2 pi xi|^{-sigma} multiplier is
/// singular at xi = 0).
SampledFunction spectral_rl_integral(const SampledFunction& u, double sigma, Side side);

}  // namespace fracspec
