#include "fracspec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracspec {

Window evaluation_window(const GridSpec& grid, double center, double radius, double pad_fraction) {
    const double half = radius + pad_fraction * grid.half_width();
    const double dx = grid.spacing();
    int lo = static_cast<int>(std::ceil((center - half + grid.half_width()) / dx));
    int hi = static_cast<int>(std::floor((center + half + grid.half_width()) / dx));
    lo = std::max(lo, 0);
    hi = std::min(hi, grid.points() - 1);
    if (hi < lo) throw InvalidInputError("evaluation window is empty");
    return Window{lo, hi};
}

Window full_window(const GridSpec& grid) { return Window{0, grid.points() - 1}; }

double windowed_l2(const SampledFunction& a, Window w) {
    double acc = 0.0;
    for (int j = w.lo; j <= w.hi; ++j) acc += a[j] * a[j];
    return std::sqrt(acc * a.grid().spacing());
}

double windowed_rel_l2(const SampledFunction& a, const SampledFunction& b, Window w) {
    require_same_grid(a.grid(), b.grid());
    double num = 0.0, den = 0.0;
    for (int j = w.lo; j <= w.hi; ++j) {
        const double d = a[j] - b[j];
        num += d * d;
        den += b[j] * b[j];
    }
    if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(num / den);
}

double rel_l2(const SampledFunction& a, const SampledFunction& b) {
    return windowed_rel_l2(a, b, full_window(a.grid()));
}

double max_abs_diff(const SampledFunction& a, const SampledFunction& b) {
    require_same_grid(a.grid(), b.grid());
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

}  // namespace fracspec
