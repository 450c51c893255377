#include "fracspec/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace fracspec {

namespace {

constexpr double kPi = std::numbers::pi;

// FFTW's planner is not thread safe; plan creation/destruction is guarded.
// Execution of a ready plan is safe. FFTW_ESTIMATE keeps planning cheap,
// deterministic, and non-destructive to the input buffer.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

void fft_inplace(std::vector<std::complex<double>>& data, int sign) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

bool parity_odd(int k) { return (k % 2) != 0; }

}  // namespace

Spectrum dft(const SampledFunction& u) {
    for (double v : u.values())
        if (!std::isfinite(v)) throw InvalidInputError("dft: input contains non-finite values");

    const GridSpec& g = u.grid();
    const int n = g.points();
    const int half = n / 2;

    std::vector<std::complex<double>> work(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) work[static_cast<std::size_t>(j)] = {u[j], 0.0};
    fft_inplace(work, FFTW_FORWARD);  // C_m = sum_j u_j e^{-2 pi i j m / N}

    // c_k = dx e^{-2 pi i x_j xi_k} summed = dx (-1)^k C_{k mod N}: the grid
    // starts at -L, and e^{+pi i k} = (-1)^k carries that origin shift.
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(n));
    const double dx = g.spacing();
    for (int i = 0; i < n; ++i) {
        const int k = i - half;
        const int m = (k + n) % n;
        const double phase = parity_odd(k) ? -dx : dx;
        coeffs[static_cast<std::size_t>(i)] = phase * work[static_cast<std::size_t>(m)];
    }
    return Spectrum(g, std::move(coeffs));
}

SampledFunction idft(const Spectrum& spectrum) {
    const GridSpec& g = spectrum.grid();
    const int n = g.points();
    const int half = n / 2;

    std::vector<std::complex<double>> work(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int k = i - half;
        const int m = (k + n) % n;
        const std::complex<double> c = spectrum.coeffs()[static_cast<std::size_t>(i)];
        work[static_cast<std::size_t>(m)] = parity_odd(k) ? -c : c;
    }
    fft_inplace(work, FFTW_BACKWARD);  // sum_m w_m e^{+2 pi i j m / N}

    double re2 = 0.0, im2 = 0.0;
    for (const auto& z : work) {
        re2 += z.real() * z.real();
        im2 += z.imag() * z.imag();
    }
    const double re_norm = std::sqrt(re2);
    const double im_norm = std::sqrt(im2);
    const double residue = re_norm > 0.0
                               ? im_norm / re_norm
                               : (im_norm > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    if (residue > 1e-8)
        throw SymmetryViolationError(
            "idft: spectrum is not conjugate-symmetric (imaginary residue " +
            std::to_string(residue) + ")");

    const double scale = 1.0 / (2.0 * g.half_width());
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) values[static_cast<std::size_t>(j)] = scale * work[static_cast<std::size_t>(j)].real();
    return SampledFunction(g, std::move(values));
}

double inner_product(const SampledFunction& u, const SampledFunction& v) {
    require_same_grid(u.grid(), v.grid());
    double acc = 0.0;
    for (int j = 0; j < u.size(); ++j) acc += u[j] * v[j];
    return acc * u.grid().spacing();
}

double l2_norm(const SampledFunction& u) {
    double acc = 0.0;
    for (double x : u.values()) acc += x * x;
    return std::sqrt(acc * u.grid().spacing());
}

double l2_norm(const Spectrum& spectrum) {
    double acc = 0.0;
    for (const auto& c : spectrum.coeffs()) acc += std::norm(c);
    return std::sqrt(acc * spectrum.grid().bin_width());
}

SobolevNorm sobolev_norm(const Spectrum& spectrum, double s) {
    if (!(s >= 0.0)) throw InvalidOrderError("sobolev_norm: order must be nonnegative");
    const GridSpec& g = spectrum.grid();
    const int half = g.points() / 2;
    double l2sq = 0.0, semisq = 0.0;
    for (int i = 0; i < g.points(); ++i) {
        const double xi = g.frequency(i - half);
        const double a = std::norm(spectrum.coeffs()[static_cast<std::size_t>(i)]);
        l2sq += a;
        semisq += std::pow(std::abs(2.0 * kPi * xi), 2.0 * s) * a;
    }
    l2sq *= g.bin_width();
    semisq *= g.bin_width();
    return SobolevNorm{std::sqrt(l2sq + semisq), std::sqrt(semisq)};
}

SobolevNorm sobolev_norm(const SampledFunction& u, double s) { return sobolev_norm(dft(u), s); }

std::vector<std::complex<double>> multiplier_values(
    const GridSpec& grid, const std::function<std::complex<double>(double)>& multiplier) {
    const int half = grid.points() / 2;
    std::vector<std::complex<double>> values(static_cast<std::size_t>(grid.points()));
    for (int i = 0; i < grid.points(); ++i) {
        const int k = i - half;
        std::complex<double> m = multiplier(grid.frequency(k));
        // k = -N/2 has no +N/2 partner; keeping only Re(m) there preserves
        // the conjugate symmetry of real data.
        if (k == -half) m = {m.real(), 0.0};
        values[static_cast<std::size_t>(i)] = m;
    }
    return values;
}

SampledFunction apply_multiplier_values(const SampledFunction& u,
                                        std::span<const std::complex<double>> values) {
    Spectrum s = dft(u);
    if (static_cast<int>(values.size()) != s.size())
        throw InvalidInputError("apply_multiplier_values: multiplier size does not match grid");
    auto coeffs = s.coeffs();
    for (std::size_t i = 0; i < values.size(); ++i) coeffs[i] *= values[i];
    return idft(s);
}

SampledFunction apply_multiplier(const SampledFunction& u,
                                 const std::function<std::complex<double>(double)>& multiplier) {
    return apply_multiplier_values(u, multiplier_values(u.grid(), multiplier));
}

SampledFunction spectral_derivative(const SampledFunction& u, int order) {
    if (order < 0) throw InvalidOrderError("spectral_derivative: order must be nonnegative");
    if (order == 0) return u;
    return apply_multiplier(u, [order](double xi) -> std::complex<double> {
        const double a = std::pow(2.0 * kPi * xi, order);
        switch (order % 4) {  // i^order
            case 0: return {a, 0.0};
            case 1: return {0.0, a};
            case 2: return {-a, 0.0};
            default: return {0.0, -a};
        }
    });
}

double top_octave_energy_fraction(const Spectrum& spectrum) {
    const GridSpec& g = spectrum.grid();
    const int half = g.points() / 2;
    const double xi_max = std::abs(g.frequency(-half));
    double total = 0.0, top = 0.0;
    for (int i = 0; i < g.points(); ++i) {
        const double a = std::norm(spectrum.coeffs()[static_cast<std::size_t>(i)]);
        total += a;
        if (std::abs(g.frequency(i - half)) >= 0.5 * xi_max) top += a;
    }
    return total > 0.0 ? top / total : 0.0;
}

}  // namespace fracspec
