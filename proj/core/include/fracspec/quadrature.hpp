#pragma once

#include <optional>

#include "fracspec/fractional_order.hpp"
#include "fracspec/grid.hpp"

namespace fracspec {

/// One-sided fractional integral of order sigma > 0 by product integration:
/// on each grid cell the input is interpolated linearly and the moments of
/// the kernel (x - t)^{sigma-1} (resp. (t - x)^{sigma-1}) are integrated in
/// closed form, so the integrable singularity at t = x is handled exactly.
///
///   left :  w(x_j) = (1/Gamma(sigma)) * integral_{-L}^{x_j} (x_j-t)^{sigma-1} u(t) dt
///   right:  w(x_j) = (1/Gamma(sigma)) * integral_{x_j}^{L}  (t-x_j)^{sigma-1} u(t) dt
///
/// The input must be effectively supported inside the grid; outputs of
/// compactly supported inputs decay only algebraically past the support, so
/// callers compare them on an evaluation window.
SampledFunction rl_integral(const SampledFunction& u, double sigma, Side side);

struct QuadratureDerivative {
    SampledFunction values;
    /// Set when the n-th derivative was obtained spectrally and its top
    /// octave carries more than 1e-6 of the spectral energy (the input is
    /// too rough for the reordered evaluation to be trusted).
    bool smoothness_warning = false;
};

/// Fractional derivative of order mu > 0 evaluated as the sigma-order
/// integral of the n-th derivative, w = D^{-sigma}(u^(n)), which agrees with
/// the n-fold derivative of the fractional integral for smooth decaying
/// input. The right-side version carries the extra factor (-1)^n.
///
/// The n-th derivative samples come from `analytic_nth` when given and are
/// computed spectrally otherwise. When sigma == 1 (integer mu) the spectral
/// path evaluates the exact reduction D^{-1}(u^(n)) = u^(n-1) directly
/// instead of integrating numerically.
QuadratureDerivative rl_derivative(const SampledFunction& u, FractionalOrder mu, Side side,
                                   const std::optional<SampledFunction>& analytic_nth = std::nullopt);

}  // namespace fracspec
