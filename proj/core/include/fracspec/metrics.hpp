#pragma once

#include "fracspec/grid.hpp"

namespace fracspec {

/// Inclusive index range of grid nodes, used to restrict comparisons to the
/// neighborhood of a function's support (one-sided operators of compactly
/// supported functions decay only algebraically, so full-grid comparisons
/// would measure truncation tails instead of scheme quality).
struct Window {
    int lo = 0;
    int hi = -1;
    bool contains(int j) const { return j >= lo && j <= hi; }
    int size() const { return hi - lo + 1; }
};

/// Window of half-width `radius + pad_fraction * L` around `center`,
/// clamped to the grid.
Window evaluation_window(const GridSpec& grid, double center, double radius, double pad_fraction);

Window full_window(const GridSpec& grid);

/// ||a - b||_2 / ||b||_2 over the window (b is the reference). A zero
/// reference with zero difference gives 0.
double windowed_rel_l2(const SampledFunction& a, const SampledFunction& b, Window w);

double rel_l2(const SampledFunction& a, const SampledFunction& b);

double max_abs_diff(const SampledFunction& a, const SampledFunction& b);

double windowed_l2(const SampledFunction& a, Window w);

}  // namespace fracspec
