#pragma once

/**
 * @file certify.hpp
 * @brief Certification of parameter points, search for the best certifiable
 * pinching gap, and bisection for the lambda-perturbation budget.
 *
 * Every decision is made on certified enclosures: a strict inequality passes
 * only if the whole enclosure lies on the correct side. An enclosure that
 * straddles the threshold is a failure with reason "indeterminate at this
 * precision". The float scan in optimize_delta only proposes candidates; it
 * never produces a reported number.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pinch/coefficients.hpp"

namespace pinch {

enum class Theorem { shrinker = 1, lambda_hypersurface = 2 };

inline int theorem_number(Theorem t) { return static_cast<int>(t); }

namespace verdict_names {
inline constexpr const char* kThetaPositive = "θ>0";
inline constexpr const char* kGradientPinch = "A<0";
inline constexpr const char* kConstantNegative = "B<0";
inline constexpr const char* kShrinkerClosing = "B+Dδ<0";
inline constexpr const char* kLambdaClosing = "B+Dδ+η<0";
// Reported against the printed thresholds; never gating.
inline constexpr const char* kConstantBelowPrinted = "B<-0.452";
inline constexpr const char* kSlopeBelowPrinted = "D<8.03";
inline constexpr const char* kEtaBelowThreshold = "η≤0.005";
}  // namespace verdict_names

inline constexpr const char* kIndeterminate = "indeterminate at this precision";

struct Verdict {
  std::string name;
  Interval enclosure;
  bool pass = false;
  /// Only gating verdicts decide Certificate::passed().
  bool gating = true;
  std::string reason;
};

struct Certificate {
  ProofParams params;
  int precision = kDefaultPrecision;
  Theorem theorem = Theorem::shrinker;
  std::vector<Verdict> verdicts;
  std::optional<Interval> delta_sup;

  bool passed() const;
  const Verdict* find(std::string_view name) const;
};

/// Bit-exact equality of two certificates (params, precision, verdicts, delta_sup).
bool identical(const Certificate& a, const Certificate& b);

/// Default threshold for eta_lambda: 1/200.
Rational default_eta_threshold();

Certificate certify_point(const ProofParams& p, Theorem theorem, int precision = kDefaultPrecision,
                          const Rational& eta_threshold = default_eta_threshold());

// ------------------------------------------------------------------ search

struct AxisRange {
  Rational lo;
  Rational hi;
};

struct SearchPoint {
  Rational sigma;
  Rational epsilon;
  Rational kappa;
};

struct SearchConfig {
  AxisRange sigma{Rational(2) / Rational(5), Rational(4) / Rational(5)};
  AxisRange epsilon{Rational(1) / Rational(50), Rational(3) / Rational(25)};
  AxisRange kappa{Rational(1) / Rational(50), Rational(2) / Rational(25)};
  int grid_resolution = 25;
  int refine_iterations = 200;
  Rational refine_shrink = Rational(1) / Rational(2);
  std::uint64_t seed = 0;
  /// Additional random starting points for the refinement, drawn from `seed`.
  int restarts = 4;
  /// Points certified in addition to the grid (those outside the box are skipped).
  std::vector<SearchPoint> extra_points{reference_search_point()};

  static SearchPoint reference_search_point();
  /// Throws std::invalid_argument on non-positive or inverted bounds,
  /// resolution < 2, shrink outside (0, 1) or negative counts.
  void validate() const;
  bool contains(const SearchPoint& p) const;
};

class EmptyFeasibleSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchResult {
  Certificate best;
  /// Every certified candidate, in evaluation order.
  std::vector<Certificate> trace;
  std::size_t grid_points = 0;
  std::size_t feasible_grid_points = 0;
};

/// Grid scan in double precision, compass-search refinement around the best
/// candidates, snapping to denominators <= 10^6 and certification (theorem 1
/// at `delta`). Deterministic for fixed inputs.
SearchResult optimize_delta(const SearchConfig& cfg, const Rational& delta = Rational(1) / Rational(18),
                            int precision = kDefaultPrecision);

// ------------------------------------------------------------------ gamma

enum class GammaMode { sharp, paper_threshold };

const char* to_string(GammaMode mode);

class InfeasibleAtZero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonMonotoneTrace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GammaProbe {
  Rational lambda;
  bool pass = false;
  Interval eta;
};

struct GammaBracket {
  GammaMode mode = GammaMode::sharp;
  /// Largest certified lambda found and the smallest failing one; fail - pass <= 10^-9.
  Rational pass;
  Rational fail;
  std::vector<GammaProbe> trace;

  Interval enclosure(int precision = kDefaultPrecision) const;
};

/// Denominator of the lambda grid used by the bisection.
BigInt gamma_grid_denominator();

/// Bisection over lambda = n / 10^9 for the largest value at which the
/// lambda-hypersurface closing condition still certifies (sharp) or at which
/// eta_lambda <= eta_threshold with that threshold fitting inside the
/// self-shrinker slack (paper_threshold). p.lambda is ignored.
GammaBracket gamma_max(const ProofParams& p, GammaMode mode, int precision = kDefaultPrecision,
                       const Rational& eta_threshold = default_eta_threshold());

}  // namespace pinch
