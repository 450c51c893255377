#pragma once

#include <complex>
#include <functional>
#include <span>

#include "fracspec/grid.hpp"

namespace fracspec {

/// Forward transform with the e^{-2 pi i x xi} convention:
///
///   c_k = dx * sum_j u(x_j) e^{-2 pi i x_j xi_k},   xi_k = k/(2L).
///
/// Because the grid origin sits at -L, this equals dx * (-1)^k times the
/// standard size-N DFT of the raw value array; the (-1)^k phase correction
/// is part of the definition, not an implementation detail.
Spectrum dft(const SampledFunction& u);

/// Inverse transform u(x_j) = (1/2L) * sum_k c_k e^{+2 pi i x_j xi_k}.
///
/// The imaginary residue of the inversion is measured (L2, relative to the
/// real part) and discarded; a residue above 1e-8 throws
/// SymmetryViolationError since the spectrum then does not describe a real
/// function.
SampledFunction idft(const Spectrum& spectrum);

/// Rectangle-rule pairing dx * sum_j u_j v_j. Spectrally accurate for smooth
/// functions that decay inside the domain.
double inner_product(const SampledFunction& u, const SampledFunction& v);

/// sqrt(dx * sum u_j^2)
double l2_norm(const SampledFunction& u);

/// sqrt(sum |c_k|^2 / (2L)) -- the frequency-domain rectangle rule; equals
/// the physical-space norm by the discrete Plancherel identity.
double l2_norm(const Spectrum& spectrum);

struct SobolevNorm {
    double norm;      // (||u||^2 + seminorm^2)^{1/2}
    double seminorm;  // || |2 pi xi|^s u_hat ||
};

/// Order-s Sobolev norm/seminorm from the frequency side:
/// seminorm^2 = sum_k |2 pi xi_k|^{2s} |c_k|^2 / (2L).
SobolevNorm sobolev_norm(const SampledFunction& u, double s);
SobolevNorm sobolev_norm(const Spectrum& spectrum, double s);

/// Multiplier samples on the grid's frequency bins, in ascending bin order.
/// The bin k = -N/2 has no conjugate partner on an even grid, so it takes
/// Re(m) there; real input then maps to real output for every
/// conjugate-symmetric multiplier.
std::vector<std::complex<double>> multiplier_values(
    const GridSpec& grid, const std::function<std::complex<double>(double)>& multiplier);

/// Multiply each spectral bin by the given value and invert (values as
/// produced by multiplier_values, or any bin-wise edit of them).
SampledFunction apply_multiplier_values(const SampledFunction& u,
                                        std::span<const std::complex<double>> values);

/// apply_multiplier_values(u, multiplier_values(u.grid(), multiplier))
SampledFunction apply_multiplier(const SampledFunction& u,
                                 const std::function<std::complex<double>(double)>& multiplier);

/// Classical n-th derivative via the (2 pi i xi)^n multiplier.
SampledFunction spectral_derivative(const SampledFunction& u, int order);

/// Fraction of spectral energy carried by the top octave |xi| >= xi_max/2.
/// Zero input reports zero.
double top_octave_energy_fraction(const Spectrum& spectrum);

}  // namespace fracspec
