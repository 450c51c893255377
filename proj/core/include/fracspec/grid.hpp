#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fracspec/errors.hpp"

namespace fracspec {

/// Uniform grid of N points on the half-open interval [-L, L).
///
/// Nodes:        x_j  = -L + j*dx,  j = 0..N-1,  dx = 2L/N
/// Frequencies:  xi_k = k/(2L),     k = -N/2..N/2-1 (ordinary frequency)
///
/// The spacing is always derived from (L, N) so dx*N == 2L holds in the
/// stored representation. N must be even and at least 8; powers of two give
/// the fastest transforms.
class GridSpec {
public:
    GridSpec(double half_width, int points) : half_width_(half_width), points_(points) {
        if (!(half_width > 0.0)) throw InvalidInputError("GridSpec: half width must be positive");
        if (points < 8) throw InvalidInputError("GridSpec: need at least 8 points");
        if (points % 2 != 0) throw InvalidInputError("GridSpec: point count must be even");
    }

    double half_width() const { return half_width_; }
    int points() const { return points_; }
    double spacing() const { return 2.0 * half_width_ / points_; }
    double point(int j) const { return -half_width_ + j * spacing(); }

    /// Frequency of bin k, k in [-N/2, N/2).
    double frequency(int k) const { return k / (2.0 * half_width_); }
    double bin_width() const { return 1.0 / (2.0 * half_width_); }
    int min_k() const { return -points_ / 2; }
    int max_k() const { return points_ / 2 - 1; }

    bool operator==(const GridSpec&) const = default;

private:
    double half_width_;
    int points_;
};

/// Real values of a function sampled at the grid nodes.
class SampledFunction {
public:
    SampledFunction(GridSpec grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != grid_.points())
            throw InvalidInputError("SampledFunction: value count does not match grid");
    }

    const GridSpec& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }
    double operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }
    int size() const { return grid_.points(); }

private:
    GridSpec grid_;
    std::vector<double> values_;
};

/// Complex Fourier coefficients on the grid's frequency bins, stored in
/// ascending frequency order: index i holds bin k = i - N/2.
class Spectrum {
public:
    Spectrum(GridSpec grid, std::vector<std::complex<double>> coeffs)
        : grid_(grid), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != grid_.points())
            throw InvalidInputError("Spectrum: coefficient count does not match grid");
    }

    const GridSpec& grid() const { return grid_; }
    std::span<const std::complex<double>> coeffs() const { return coeffs_; }
    std::span<std::complex<double>> coeffs() { return coeffs_; }

    std::complex<double> coeff(int k) const { return coeffs_[index_of(k)]; }
    std::complex<double>& coeff(int k) { return coeffs_[index_of(k)]; }
    double frequency_at(std::size_t i) const {
        return grid_.frequency(static_cast<int>(i) - grid_.points() / 2);
    }

    int size() const { return grid_.points(); }

private:
    std::size_t index_of(int k) const { return static_cast<std::size_t>(k + grid_.points() / 2); }

    GridSpec grid_;
    std::vector<std::complex<double>> coeffs_;
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (!(a == b)) throw GridMismatchError("operands live on different grids");
}

// Pointwise arithmetic; operands must share a grid.
SampledFunction operator+(const SampledFunction& a, const SampledFunction& b);
SampledFunction operator-(const SampledFunction& a, const SampledFunction& b);
SampledFunction operator*(double c, const SampledFunction& a);

}  // namespace fracspec
