#pragma once

#include <filesystem>
#include <string>

#include "fracspec/grid.hpp"

namespace fracspec {

/// CSV with header `x,value` and one row per grid node (all N rows).
/// Numbers are written in the shortest representation that round-trips to
/// the same double, so write-then-read is exact and files diff stably.
void write_csv(const SampledFunction& u, const std::filesystem::path& path);
SampledFunction read_sampled_csv(const std::filesystem::path& path);

/// CSV with header `xi,re,im`, rows in ascending frequency order.
void write_csv(const Spectrum& spectrum, const std::filesystem::path& path);
Spectrum read_spectrum_csv(const std::filesystem::path& path);

/// Shortest round-trip decimal text for a double (locale independent).
std::string format_double(double v);
double parse_double(std::string_view text);

}  // namespace fracspec
