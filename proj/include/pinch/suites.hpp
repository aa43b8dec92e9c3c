#pragma once

// Randomized exact property suites over the pointwise tensor algebra.
//
// Each trial draws its data from its own generator seeded by
// (seed, suite stream, trial index), so a trial can be replayed in isolation
// and the aggregate does not depend on the number of worker threads.

#include <cstdint>
#include <string>
#include <vector>

#include "pinch/exact/rational.hpp"

namespace pinch {

struct SuiteOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  int precision = 256;
  int max_precision = 1024;
  /// Largest dimension drawn (1..max_dim, or 2..max_dim where n = 1 is trivial).
  std::size_t max_dim = 6;
  Rational delta = Rational(1) / Rational(18);
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SuiteNote {
  std::string key;
  std::string value;
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t indeterminates = 0;
  std::size_t skipped = 0;
  /// First few failing trials, in trial order.
  std::vector<std::string> counterexamples;
  std::vector<SuiteNote> notes;

  bool passed() const { return failures == 0; }
};

inline constexpr std::size_t kMaxReportedCounterexamples = 5;

namespace suite_names {
inline constexpr const char* kGapIdentity = "gap_identity";
inline constexpr const char* kContractionRoutes = "contraction_routes";
inline constexpr const char* kCBound = "c_bound";
inline constexpr const char* kSymmetrization = "symmetrization";
inline constexpr const char* kDxLemma = "dx_lemma";
inline constexpr const char* kScaling = "scaling_covariance";
inline constexpr const char* kFLambdaBounds = "f_lambda_bounds";
}  // namespace suite_names

/// sum t_ij^2 = 2 (S f4 - f3^2) and G >= 0.
SuiteResult run_gap_identity_suite(const SuiteOptions& opts);
/// General contraction equals the diagonal shortcut for B1, B2, C.
SuiteResult run_contraction_route_suite(const SuiteOptions& opts);
/// C^2 <= S |nabla A|^4.
SuiteResult run_c_bound_suite(const SuiteOptions& opts);
/// Cyclic-average gap >= (3/4) sum (h_ijij - h_jiji)^2; notes the smallest
/// observed gap / sum (h_ijij - h_jiji)^2.
SuiteResult run_symmetrization_suite(const SuiteOptions& opts);
/// 3 (B1 - 2 B2) <= (S + C1 G^{1/3}) |nabla A|^2 on certified enclosures.
/// Only confirmed counterexamples count as failures.
SuiteResult run_dx_lemma_suite(const SuiteOptions& opts);
/// Degrees 6, 4, 4, 3 of G, B1, B2, C under mu -> c mu, h -> c h.
SuiteResult run_scaling_suite(const SuiteOptions& opts);
/// Exact F = S^2 - S - lambda f3 lies between the lower bound and, inside
/// the band beta <= S <= beta + delta, the upper bound.
SuiteResult run_f_lambda_bounds_suite(const SuiteOptions& opts);

/// All suites above, in the order listed.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts);

}  // namespace pinch
