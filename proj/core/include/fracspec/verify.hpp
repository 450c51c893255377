#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fracspec/grid.hpp"
#include "fracspec/metrics.hpp"

namespace fracspec::verify {

/// Shared configuration for the verification suites. Tolerances default to
/// the documented tiers (see suite_default_tolerance); entries in
/// `tolerance_overrides`, keyed by suite name, replace the tolerance of
/// every case of that suite.
struct SuiteConfig {
    GridSpec grid{16.0, 4096};
    std::vector<double> orders{0.25, 0.3, 0.5, 0.75, 1.0, 1.5, 2.0, 2.4, 3.0};
    std::map<std::string, double> tolerance_overrides;
    std::uint64_t seed = 42;
    double window_pad_fraction = 0.25;
};

struct CaseResult {
    std::string desc;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;
    bool pass = true;            // conjunction of case passes
    double seconds = 0.0;
    std::vector<std::string> covers;  // invariant tags exercised by the suite
};

// Operator-identity suites. Each returns one report; a failing case never
// throws -- failure is data in the report.
VerificationReport check_plancherel_parseval(const SuiteConfig& config);
VerificationReport check_duality(const SuiteConfig& config);
VerificationReport check_semigroup(const SuiteConfig& config);
VerificationReport check_translation_dilation(const SuiteConfig& config);
VerificationReport check_norm_identity(const SuiteConfig& config);
VerificationReport check_seminorm_equality(const SuiteConfig& config);
VerificationReport check_roundtrip(const SuiteConfig& config);
VerificationReport check_symbol_agreement(const SuiteConfig& config);
VerificationReport check_chi_sign(const SuiteConfig& config);
VerificationReport check_weak_derivative(const SuiteConfig& config);
VerificationReport check_quadrature_closed_form(const SuiteConfig& config);

/// All suites above, in a fixed order, deterministically for a given config.
std::vector<VerificationReport> run_all(const SuiteConfig& config);

bool all_pass(const std::vector<VerificationReport>& reports);

std::vector<std::string> suite_names();

/// Default tolerance of a suite at the configured resolution. Identities
/// that are exact on the grid keep their tight tier at every N; suites
/// limited by quadrature order or by spectral content near the Nyquist
/// frequency relax to 1e-2 below N = 4096.
double suite_default_tolerance(const std::string& suite, const SuiteConfig& config);

/// Invariant tags that must all be covered by at least one suite.
std::vector<std::string> required_invariant_tags();

/// Deterministic pseudo-random samples in [-1, 1), identical on every
/// platform for a given seed.
SampledFunction uniform_noise(const GridSpec& grid, std::uint64_t seed);

}  // namespace fracspec::verify
