#include "pinch/spectral.hpp"

#include <algorithm>
#include <array>

#include "pinch/coefficients.hpp"

namespace pinch {

Rational gauss_curvature(const EigenSpectrum& spec, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t n = spec.size();
  if (i >= n || j >= n || k >= n || l >= n) throw std::out_of_range("curvature index out of range");
  auto h = [&](std::size_t a, std::size_t b) { return a == b ? spec.mu[a] : Rational(0); };
  return h(i, k) * h(j, l) - h(i, l) * h(j, k);
}

// ---------------------------------------------------------------- Grad3

Grad3 Grad3::symmetrized(const Grad3& raw) {
  const std::size_t n = raw.dim();
  Grad3 out(n);
  const Rational sixth(BigInt(1), BigInt(6));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out.at(i, j, k) = (raw.at(i, j, k) + raw.at(i, k, j) + raw.at(j, i, k) + raw.at(j, k, i) +
                           raw.at(k, i, j) + raw.at(k, j, i)) *
                          sixth;
      }
    }
  }
  return out;
}

bool Grad3::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        const Rational& v = at(i, j, k);
        if (v != at(i, k, j) || v != at(j, i, k) || v != at(k, j, i)) return false;
      }
    }
  }
  return true;
}

Rational Grad3::norm_squared() const {
  Rational s(0);
  for (const Rational& v : data_) s += v * v;
  return s;
}

Grad3 Grad3::scaled(const Rational& c) const {
  Grad3 out = *this;
  for (Rational& v : out.data_) v *= c;
  return out;
}

// ---------------------------------------------------------------- Hess4

Hess4 Hess4::symmetrized(const Hess4& raw) {
  const std::size_t n = raw.dim();
  Hess4 out(n);
  const Rational sixth(BigInt(1), BigInt(6));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          out.at(i, j, k, l) = (raw.at(i, j, k, l) + raw.at(i, k, j, l) + raw.at(j, i, k, l) +
                                raw.at(j, k, i, l) + raw.at(k, i, j, l) + raw.at(k, j, i, l)) *
                               sixth;
  return out;
}

bool Hess4::is_first_three_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) {
          const Rational& v = at(i, j, k, l);
          if (v != at(i, k, j, l) || v != at(j, i, k, l) || v != at(k, j, i, l)) return false;
        }
  return true;
}

// ---------------------------------------------------------------- contractions

ContractionSet contractions(const EigenSpectrum& spec, const Grad3& g) {
  const std::size_t n = spec.size();
  if (g.dim() != n)
    throw std::invalid_argument("dimension mismatch: spectrum has " + std::to_string(n) + " entries, h_ijk has " +
                                std::to_string(g.dim()));

  ContractionSet out;
  auto f = power_sums(spec, 4);
  out.S = f[1];
  out.f3 = f[2];
  out.f4 = f[3];
  out.G = gap_G(spec);
  out.gradA2 = g.norm_squared();
  if (n == 0) return out;

  // General route: h_ij as a full matrix, no use of its diagonal structure.
  std::vector<Rational> h(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) h[i * n + i] = spec.mu[i];
  std::vector<Rational> h2(n * n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m) h2[k * n + l] += h[k * n + m] * h[m * n + l];

  // M_kl = sum_ij h_ijk h_ijl
  std::vector<Rational> mkl(n * n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mkl[k * n + l] += g.at(i, j, k) * g.at(i, j, l);

  Rational b1(0), c(0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      b1 += mkl[k * n + l] * h2[k * n + l];
      c += mkl[k * n + l] * h[k * n + l];
    }

  // W_kli = sum_m h_klm h_im ; B2 = sum_ijkl h_ijk W_kli h_jl
  std::vector<Rational> w(n * n * n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m) w[(k * n + l) * n + i] += g.at(k, l, m) * h[i * n + m];
  Rational b2(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) b2 += g.at(i, j, k) * w[(k * n + l) * n + i] * h[j * n + l];

  // Diagonal-frame shortcuts.
  Rational b1d(0), b2d(0), cd(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational h2ijk = g.at(i, j, k) * g.at(i, j, k);
        b1d += h2ijk * spec.mu[k] * spec.mu[k];
        b2d += h2ijk * spec.mu[i] * spec.mu[j];
        cd += h2ijk * spec.mu[k];
      }

  if (b1 != b1d) throw IdentityViolation("B1: general contraction " + b1.str() + " != diagonal " + b1d.str());
  if (b2 != b2d) throw IdentityViolation("B2: general contraction " + b2.str() + " != diagonal " + b2d.str());
  if (c != cd) throw IdentityViolation("C: general contraction " + c.str() + " != diagonal " + cd.str());
  out.B1 = b1;
  out.B2 = b2;
  out.C = c;
  return out;
}

CBoundWitness check_c_bound(const EigenSpectrum& spec, const Grad3& g) {
  ContractionSet c = contractions(spec, g);
  CBoundWitness w;
  w.c_squared = c.C * c.C;
  w.s_times_grad_squared = c.S * c.gradA2 * c.gradA2;
  w.holds = w.c_squared <= w.s_times_grad_squared;
  return w;
}

const char* to_string(LemmaOutcome o) {
  switch (o) {
    case LemmaOutcome::pass: return "pass";
    case LemmaOutcome::indeterminate: return "indeterminate";
    case LemmaOutcome::counterexample: return "counterexample";
  }
  return "?";
}

LemmaWitness check_dx_lemma(const EigenSpectrum& spec, const Grad3& g, int precision, int max_precision) {
  ContractionSet c = contractions(spec, g);
  LemmaWitness w;
  w.lhs = Rational(3) * (c.B1 - Rational(2) * c.B2);

  if (c.G.is_zero()) {
    // G^{1/3} = 0: the inequality is rational and decided exactly.
    Rational slack = c.S * c.gradA2 - w.lhs;
    w.slack = Interval::from_rational(slack, precision);
    w.precision_used = precision;
    w.outcome = slack.sign() >= 0 ? LemmaOutcome::pass : LemmaOutcome::counterexample;
    return w;
  }

  for (int prec = precision;; prec *= 2) {
    prec = std::min(prec, max_precision);
    Interval rhs = (Interval::from_rational(c.S, prec) + c1(prec) * cbrt(Interval::from_rational(c.G, prec))) *
                   c.gradA2;
    w.slack = rhs - w.lhs;
    w.precision_used = prec;
    if (w.slack.certainly_nonnegative()) {
      w.outcome = LemmaOutcome::pass;
      return w;
    }
    if (w.slack.certainly_negative()) {
      w.outcome = LemmaOutcome::counterexample;
      return w;
    }
    if (prec >= max_precision) break;
  }
  w.outcome = LemmaOutcome::indeterminate;
  return w;
}

// ---------------------------------------------------------------- symmetrization

SymmetrizationGap symmetrization_gap(const Hess4& h4) {
  if (!h4.is_first_three_symmetric())
    throw std::invalid_argument("h_ijkl must be symmetric in its first three indices");
  const std::size_t n = h4.dim();
  const Rational quarter(BigInt(1), BigInt(4));
  Rational sum_h(0), sum_u(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& v = h4.at(i, j, k, l);
          sum_h += v * v;
          Rational u = (v + h4.at(l, i, j, k) + h4.at(k, l, i, j) + h4.at(j, k, l, i)) * quarter;
          sum_u += u * u;
        }
  Rational t2(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational t = h4.at(i, j, i, j) - h4.at(j, i, j, i);
      t2 += t * t;
    }
  return {sum_h - sum_u, Rational(BigInt(3), BigInt(4)) * t2};
}

}  // namespace pinch
