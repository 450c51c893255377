#include "fracspec/grid.hpp"

namespace fracspec {

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) {
    require_same_grid(a.grid(), b.grid());
    std::vector<double> out(a.values().begin(), a.values().end());
    for (int j = 0; j < b.size(); ++j) out[static_cast<std::size_t>(j)] += b[j];
    return SampledFunction(a.grid(), std::move(out));
}

SampledFunction operator-(const SampledFunction& a, const SampledFunction& b) {
    require_same_grid(a.grid(), b.grid());
    std::vector<double> out(a.values().begin(), a.values().end());
    for (int j = 0; j < b.size(); ++j) out[static_cast<std::size_t>(j)] -= b[j];
    return SampledFunction(a.grid(), std::move(out));
}

SampledFunction operator*(double c, const SampledFunction& a) {
    std::vector<double> out(a.values().begin(), a.values().end());
    for (double& v : out) v *= c;
    return SampledFunction(a.grid(), std::move(out));
}

}  // namespace fracspec
