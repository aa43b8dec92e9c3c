#pragma once

/**
 * @file coefficients.hpp
 * @brief Certified enclosures of every scalar in the pinching estimate chain.
 *
 * The chain, with C1 = (2 sqrt6 + 3) / cbrt(21 sqrt6 + 103/2):
 *
 *   theta = 1 - (2/9) C1 s^2 - (2/3) C1 e / s
 *   L1    = (2/3) C1 e / s + 2 theta
 *   L2    = (1/6) C1 s^2 + C1 e / s + C1 / (24 e s) + (9/4) theta
 *   A     = 1 + L1 - 2 L2 + C1 / (12 s k)           gradient-pinch coefficient
 *   B     = 1 - L1 + (4/3) C1 k / s                  constant coefficient
 *   D     = (4/3) C1 k / s + 2 L2                    slope in the gap delta
 *
 * where (s, e, k) = (sigma, epsilon, kappa). The rigidity argument closes when
 * theta > 0, A < 0 and B + D delta (+ eta_lambda for lambda-hypersurfaces) < 0.
 *
 * All parameters are rationals; every returned interval contains the exact
 * real value of its expression.
 */

#include <optional>
#include <utility>

#include "pinch/exact/interval.hpp"
#include "pinch/exact/quadratic.hpp"
#include "pinch/exact/rational.hpp"

namespace pinch {

struct ProofParams {
  Rational sigma;
  Rational epsilon;
  Rational kappa;
  Rational delta;
  Rational lambda;

  /// sigma = 0.616, epsilon = 0.0577, kappa = 0.0434, delta = 1/18, lambda = 0.
  static ProofParams reference_point();
  /// Throws std::invalid_argument unless sigma, epsilon, kappa > 0 and delta >= 0.
  void validate() const;

  friend bool operator==(const ProofParams&, const ProofParams&) = default;
};

struct CoefficientSet {
  Interval c1;
  Interval theta;
  Interval l1;
  Interval l2;
  Interval coef_gradient_pinch;  // A
  Interval coef_constant;        // B
  Interval coef_delta_slope;     // D
  Interval eta;                  // [0, 0] for self-shrinkers
};

Interval c1(int precision = kDefaultPrecision);
Interval theta(const ProofParams& p, int precision = kDefaultPrecision);

struct LPair {
  Interval l1;
  Interval l2;
};
LPair l1_l2(const ProofParams& p, int precision = kDefaultPrecision);

CoefficientSet theorem1_coefficients(const ProofParams& p, int precision = kDefaultPrecision);
/// Same A, B, D as the self-shrinker chain plus eta = eta_lambda(p).
CoefficientSet theorem2_coefficients(const ProofParams& p, int precision = kDefaultPrecision);

/// Enclosure of -B/D when theta > 0, A < 0 and B < 0 are all certified;
/// nullopt otherwise.
std::optional<Interval> delta_max(const ProofParams& p, int precision = kDefaultPrecision);
std::optional<Interval> delta_max(const CoefficientSet& c);

struct BetaAlpha {
  QuadraticNumber beta;
  QuadraticNumber alpha;
};
/// beta, alpha = (2 + l^2 +- |l| sqrt(l^2 + 4)) / 2, exact in Q(sqrt(l^2 + 4)).
BetaAlpha beta_alpha(const Rational& lambda);

/// q = |l| sqrt(l^2+4) and r = q + l^2 + |l| delta / sqrt(l^2+4), exact.
QuadraticNumber q_lambda(const Rational& lambda);
QuadraticNumber r_lambda(const Rational& lambda, const Rational& delta);

/// Lower bound S (S - 1 - |l| sqrt S) for F = S^2 - S - l f3. Exact when sqrt(S)
/// lies in the field of S; the enclosure is always filled in.
struct FLambdaLower {
  std::optional<QuadraticNumber> exact;
  Interval enclosure;
};
FLambdaLower f_lambda_lower(const QuadraticNumber& S, const Rational& lambda,
                            int precision = kDefaultPrecision);

/// Upper bound S (S - beta + r) valid on the pinching band beta <= S <= beta + delta.
/// Throws std::domain_error when S lies outside the band.
QuadraticNumber f_lambda_upper(const QuadraticNumber& S, const Rational& lambda, const Rational& delta);

struct FLambdaBounds {
  FLambdaLower lower;
  QuadraticNumber upper;
};
FLambdaBounds f_lambda_bounds(const QuadraticNumber& S, const Rational& lambda, const Rational& delta,
                              int precision = kDefaultPrecision);

/// True when beta_lambda <= S <= beta_lambda + delta, decided exactly.
bool in_pinching_band(const QuadraticNumber& S, const Rational& lambda, const Rational& delta);

/// Aggregate lambda-perturbation of the constant coefficient:
///   (4/(3s)) C1 rt k + (1 + L1) rt + C1/(12 s k) r + 2|l| (C1 e/s + 3 theta) sqrt(1 + rt + delta)
/// with rt = beta_lambda - 1.
Interval eta_lambda(const ProofParams& p, int precision = kDefaultPrecision);

/// Uncertified double-precision evaluation of the chain, for cheap scans.
struct FloatCoefficients {
  double theta = 0;
  double l1 = 0;
  double l2 = 0;
  double a = 0;
  double b = 0;
  double d = 0;

  bool feasible(double margin = 0.0) const { return theta > margin && a < -margin && b < -margin; }
  double delta_sup() const { return -b / d; }
};
FloatCoefficients estimate_coefficients(double sigma, double epsilon, double kappa);
double estimate_eta(double sigma, double epsilon, double kappa, double delta, double lambda);

}  // namespace pinch
