#include "pinch/models.hpp"

#include <string>

#include "pinch/coefficients.hpp"
#include "pinch/spectral.hpp"

namespace pinch {

const char* to_string(ModelKind kind) {
  return kind == ModelKind::round_sphere ? "round_sphere" : "cylinder";
}

const char* to_string(SurfaceEquation eq) {
  return eq == SurfaceEquation::shrinker ? "shrinker" : "lambda_hypersurface";
}

namespace {

Rational field_radicand(const Rational& lambda, int k) { return lambda * lambda + Rational(4L * k); }

}  // namespace

ModelSurface make_model(const Rational& lambda, int k, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  if (k < 1 || k > n)
    throw std::invalid_argument("k must satisfy 1 <= k <= n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
  ModelSurface m;
  m.kind = k == n ? ModelKind::round_sphere : ModelKind::cylinder;
  m.n = n;
  m.k = k;
  m.lambda = lambda;
  if (lambda.is_zero()) {
    m.radius = QuadraticNumber::sqrt_of(Rational(k));
  } else {
    const Rational half(BigInt(1), BigInt(2));
    m.radius = QuadraticNumber(-lambda * half, half, field_radicand(lambda, k));
  }
  if (m.radius.sign() != Sign::positive) throw std::logic_error("model radius is not positive");
  if (!(QuadraticNumber(lambda) * m.radius == QuadraticNumber(k) - m.radius * m.radius))
    throw std::logic_error("radius violates lambda r = k - r^2");
  return m;
}

std::vector<QuadraticNumber> principal_curvatures(const ModelSurface& m) {
  QuadraticNumber mu;
  if (m.lambda.is_zero()) {
    // 1 / sqrt(k) = sqrt(k) / k
    mu = QuadraticNumber(Rational(0), Rational(BigInt(1), BigInt(m.k)), Rational(m.k));
  } else {
    const Rational two_k(2L * m.k);
    mu = QuadraticNumber(m.lambda / two_k, Rational(1) / two_k, field_radicand(m.lambda, m.k));
  }
  if (!(mu * m.radius == QuadraticNumber(1))) throw std::logic_error("mu r != 1");
  std::vector<QuadraticNumber> out(static_cast<std::size_t>(m.n), QuadraticNumber(0));
  for (int i = 0; i < m.k; ++i) out[static_cast<std::size_t>(i)] = mu;
  return out;
}

QuadraticNumber residual(const ModelSurface& m, SurfaceEquation eq) {
  if (eq == SurfaceEquation::shrinker && !m.lambda.is_zero())
    throw std::invalid_argument("shrinker equation requires lambda = 0, got " + m.lambda.str());
  QuadraticNumber h = QuadraticNumber(m.k) * principal_curvatures(m).front();
  QuadraticNumber x_normal = -m.radius;
  QuadraticNumber lambda = eq == SurfaceEquation::shrinker ? QuadraticNumber(0) : QuadraticNumber(m.lambda);
  return h + x_normal - lambda;
}

QuadraticNumber norm_S_k(const ModelSurface& m) {
  QuadraticNumber mu = principal_curvatures(m).front();
  QuadraticNumber s = QuadraticNumber(m.k) * mu * mu;
  QuadraticNumber closed(1);
  if (!m.lambda.is_zero()) {
    const Rational two_k(2L * m.k);
    Rational irr = abs(m.lambda) / two_k;
    if (m.lambda.sign() < 0) irr = -irr;
    closed = QuadraticNumber((m.lambda * m.lambda + Rational(2L * m.k)) / two_k, irr,
                             field_radicand(m.lambda, m.k));
  }
  if (!(s == closed)) throw std::logic_error("k mu^2 = " + s.str() + " disagrees with closed form " + closed.str());
  return s;
}

std::vector<Admissibility> classify_admissible(const Rational& lambda, int n) {
  if (lambda.is_zero())
    throw std::invalid_argument("lambda = 0: every sphere and cylinder pinches at |A|^2 = 1");
  QuadraticNumber beta = beta_alpha(lambda).beta;
  std::vector<Admissibility> out;
  for (int k = 1; k <= n; ++k) {
    Admissibility a;
    a.k = k;
    a.s_k = norm_S_k(make_model(lambda, k, n));
    a.versus_beta = compare(a.s_k, beta);
    a.admissible = a.versus_beta == Sign::zero;
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<int> FamilyCheck::admissible_k() const {
  std::vector<int> out;
  for (const Admissibility& a : admissibility)
    if (a.admissible) out.push_back(a.k);
  return out;
}

FamilyCheck check_family(const Rational& lambda, int n) {
  FamilyCheck out;
  out.lambda = lambda;
  out.n = n;
  const QuadraticNumber beta = beta_alpha(lambda).beta;
  for (int k = 1; k <= n; ++k) {
    const std::string at = " (k=" + std::to_string(k) + ")";
    try {
      ModelSurface m = make_model(lambda, k, n);
      BasicSpectrum<QuadraticNumber> spec{principal_curvatures(m)};
      if (!(residual(m, SurfaceEquation::lambda_hypersurface) == QuadraticNumber(0)))
        out.problems.push_back("nonzero lambda-hypersurface residual" + at);
      if (lambda.is_zero() && !(residual(m, SurfaceEquation::shrinker) == QuadraticNumber(0)))
        out.problems.push_back("nonzero shrinker residual" + at);
      if (!(gap_G(spec) == QuadraticNumber(0))) out.problems.push_back("G != 0" + at);

      Admissibility a;
      a.k = k;
      a.s_k = norm_S_k(m);
      a.versus_beta = compare(a.s_k, beta);
      a.admissible = a.versus_beta == Sign::zero;
      const bool expect_equal = lambda.is_zero() || (k == 1 && lambda.sign() > 0);
      if (expect_equal != a.admissible || (!expect_equal && a.versus_beta != Sign::negative))
        out.problems.push_back(std::string("S_k - beta has sign ") + to_string(a.versus_beta) + at);

      if (a.admissible && !lambda.is_zero()) {
        QuadraticNumber f = f_lambda_gap(spec, lambda);
        FLambdaLower lower = f_lambda_lower(a.s_k, lambda);
        if (!(f == QuadraticNumber(0))) out.problems.push_back("F != 0 on the admissible cylinder" + at);
        if (!lower.exact || !(*lower.exact == QuadraticNumber(0)))
          out.problems.push_back("lower bound for F is not attained on the admissible cylinder" + at);
      }
      out.admissibility.push_back(std::move(a));
    } catch (const std::exception& e) {
      out.problems.push_back(std::string(e.what()) + at);
    }
  }
  return out;
}

}  // namespace pinch
