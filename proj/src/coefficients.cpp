#include "pinch/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace pinch {

namespace {

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

Interval exact(const Rational& q, int precision) { return Interval::from_rational(q, precision); }

// C1 * sigma^-1, shared by most terms.
struct ChainPieces {
  Interval c1;
  Interval c1_over_sigma;
  Interval theta;
  Interval l1;
  Interval l2;
};

ChainPieces chain(const ProofParams& p, int precision) {
  if (p.sigma.sign() <= 0) throw std::invalid_argument("sigma must be positive");
  Interval k = c1(precision);
  Interval k_over_s = k / p.sigma;
  Interval th = Rational(1) - (frac(2, 9) * k * (p.sigma * p.sigma) + frac(2, 3) * k_over_s * p.epsilon);
  Interval l1 = frac(2, 3) * k_over_s * p.epsilon + Rational(2) * th;
  Interval l2(precision);
  if (p.epsilon.sign() > 0) {
    l2 = frac(1, 6) * k * (p.sigma * p.sigma) + k_over_s * p.epsilon +
         k_over_s / (Rational(24) * p.epsilon) + frac(9, 4) * th;
  }
  return {k, k_over_s, th, l1, l2};
}

CoefficientSet assemble(const ProofParams& p, int precision) {
  p.validate();
  ChainPieces c = chain(p, precision);
  Interval a = Rational(1) + c.l1 - Rational(2) * c.l2 + c.c1_over_sigma / (Rational(12) * p.kappa);
  Interval kappa_term = frac(4, 3) * c.c1_over_sigma * p.kappa;
  Interval b = Rational(1) - c.l1 + kappa_term;
  Interval d = kappa_term + Rational(2) * c.l2;
  return {c.c1, c.theta, c.l1, c.l2, a, b, d, Interval(precision)};
}

}  // namespace

ProofParams ProofParams::reference_point() {
  return {frac(616, 1000), frac(577, 10000), frac(434, 10000), frac(1, 18), Rational(0)};
}

void ProofParams::validate() const {
  if (sigma.sign() <= 0) throw std::invalid_argument("sigma must be positive, got " + sigma.str());
  if (epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive, got " + epsilon.str());
  if (kappa.sign() <= 0) throw std::invalid_argument("kappa must be positive, got " + kappa.str());
  if (delta.sign() < 0) throw std::invalid_argument("delta must be nonnegative, got " + delta.str());
}

Interval c1(int precision) {
  Interval root6 = sqrt(exact(Rational(6), precision));
  Interval num = Rational(2) * root6 + Rational(3);
  Interval den = cbrt(Rational(21) * root6 + frac(103, 2));
  return num / den;
}

Interval theta(const ProofParams& p, int precision) { return chain(p, precision).theta; }

LPair l1_l2(const ProofParams& p, int precision) {
  if (p.epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
  ChainPieces c = chain(p, precision);
  return {c.l1, c.l2};
}

CoefficientSet theorem1_coefficients(const ProofParams& p, int precision) { return assemble(p, precision); }

CoefficientSet theorem2_coefficients(const ProofParams& p, int precision) {
  CoefficientSet out = assemble(p, precision);
  out.eta = eta_lambda(p, precision);
  return out;
}

std::optional<Interval> delta_max(const CoefficientSet& c) {
  if (!c.theta.certainly_positive() || !c.coef_gradient_pinch.certainly_negative() ||
      !c.coef_constant.certainly_negative())
    return std::nullopt;
  return -c.coef_constant / c.coef_delta_slope;
}

std::optional<Interval> delta_max(const ProofParams& p, int precision) {
  return delta_max(theorem1_coefficients(p, precision));
}

BetaAlpha beta_alpha(const Rational& lambda) {
  Rational d = lambda * lambda + Rational(4);
  Rational a = (Rational(2) + lambda * lambda) / Rational(2);
  Rational b = abs(lambda) / Rational(2);
  return {QuadraticNumber(a, b, d), QuadraticNumber(a, -b, d)};
}

QuadraticNumber q_lambda(const Rational& lambda) {
  return QuadraticNumber(Rational(0), abs(lambda), lambda * lambda + Rational(4));
}

QuadraticNumber r_lambda(const Rational& lambda, const Rational& delta) {
  Rational d = lambda * lambda + Rational(4);
  // |l| delta / sqrt(d) = (|l| delta / d) sqrt(d)
  QuadraticNumber tail(Rational(0), abs(lambda) * delta / d, d);
  return q_lambda(lambda) + QuadraticNumber(lambda * lambda) + tail;
}

FLambdaLower f_lambda_lower(const QuadraticNumber& S, const Rational& lambda, int precision) {
  if (S.sign() == Sign::negative) throw std::domain_error("S must be nonnegative");
  if (lambda.is_zero()) {
    QuadraticNumber value = S * (S - QuadraticNumber(1));
    return {value, value.enclose(precision)};
  }
  if (auto root = S.sqrt()) {
    QuadraticNumber value = S * (S - QuadraticNumber(1) - QuadraticNumber(abs(lambda)) * *root);
    return {value, value.enclose(precision)};
  }
  Interval s = S.enclose(precision);
  Interval root = sqrt(abs(s));
  Interval value = s * (s - Rational(1) - abs(lambda) * root);
  return {std::nullopt, value};
}

bool in_pinching_band(const QuadraticNumber& S, const Rational& lambda, const Rational& delta) {
  QuadraticNumber beta = beta_alpha(lambda).beta;
  return compare(S, beta) != Sign::negative && compare(S, beta + QuadraticNumber(delta)) != Sign::positive;
}

QuadraticNumber f_lambda_upper(const QuadraticNumber& S, const Rational& lambda, const Rational& delta) {
  if (!in_pinching_band(S, lambda, delta))
    throw std::domain_error("S = " + S.str() + " lies outside the pinching band [beta, beta + " +
                            delta.str() + "]");
  QuadraticNumber beta = beta_alpha(lambda).beta;
  return S * (S - beta + r_lambda(lambda, delta));
}

FLambdaBounds f_lambda_bounds(const QuadraticNumber& S, const Rational& lambda, const Rational& delta,
                              int precision) {
  QuadraticNumber upper = f_lambda_upper(S, lambda, delta);
  return {f_lambda_lower(S, lambda, precision), upper};
}

Interval eta_lambda(const ProofParams& p, int precision) {
  p.validate();
  ChainPieces c = chain(p, precision);
  Rational lam = abs(p.lambda);
  Rational lam2 = p.lambda * p.lambda;
  Interval root = sqrt(exact(lam2 + Rational(4), precision));
  // beta - 1 = (l^2 + |l| sqrt(l^2+4)) / 2
  Interval rt = (lam2 + lam * root) / Rational(2);
  Interval r = lam * root + lam2 + lam * p.delta / root;

  Interval t1 = frac(4, 3) * c.c1_over_sigma * rt * p.kappa;
  Interval t2 = (Rational(1) + c.l1) * rt;
  Interval t3 = c.c1_over_sigma / (Rational(12) * p.kappa) * r;
  Interval t4 = Rational(2) * lam * (c.c1_over_sigma * p.epsilon + Rational(3) * c.theta) *
                sqrt(Rational(1) + rt + p.delta);
  return t1 + t2 + t3 + t4;
}

FloatCoefficients estimate_coefficients(double sigma, double epsilon, double kappa) {
  static const double kC1 = (2.0 * std::sqrt(6.0) + 3.0) / std::cbrt(21.0 * std::sqrt(6.0) + 51.5);
  const double ks = kC1 / sigma;
  FloatCoefficients f;
  f.theta = 1.0 - (2.0 / 9.0 * kC1 * sigma * sigma + 2.0 / 3.0 * ks * epsilon);
  f.l1 = 2.0 / 3.0 * ks * epsilon + 2.0 * f.theta;
  f.l2 = kC1 * sigma * sigma / 6.0 + ks * epsilon + ks / (24.0 * epsilon) + 2.25 * f.theta;
  f.a = 1.0 + f.l1 - 2.0 * f.l2 + ks / (12.0 * kappa);
  f.b = 1.0 - f.l1 + 4.0 / 3.0 * ks * kappa;
  f.d = 4.0 / 3.0 * ks * kappa + 2.0 * f.l2;
  return f;
}

double estimate_eta(double sigma, double epsilon, double kappa, double delta, double lambda) {
  FloatCoefficients f = estimate_coefficients(sigma, epsilon, kappa);
  static const double kC1 = (2.0 * std::sqrt(6.0) + 3.0) / std::cbrt(21.0 * std::sqrt(6.0) + 51.5);
  const double ks = kC1 / sigma;
  const double lam = std::fabs(lambda);
  const double root = std::sqrt(lam * lam + 4.0);
  const double rt = (lam * lam + lam * root) / 2.0;
  const double r = lam * root + lam * lam + lam * delta / root;
  return 4.0 / 3.0 * ks * rt * kappa + (1.0 + f.l1) * rt + ks / (12.0 * kappa) * r +
         2.0 * lam * (ks * epsilon + 3.0 * f.theta) * std::sqrt(1.0 + rt + delta);
}

}  // namespace pinch
