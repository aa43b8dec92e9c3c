#pragma once

/**
 * @file spectral.hpp
 * @brief Pointwise tensor algebra of the rigidity argument, in exact arithmetic.
 *
 * Everything is expressed in a frame diagonalizing the second fundamental
 * form, h_ij = mu_i delta_ij. Grad3 holds the (Codazzi-symmetric) first
 * derivative h_ijk, Hess4 the second derivative h_ijkl, symmetric in its
 * first three indices.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pinch/exact/interval.hpp"
#include "pinch/exact/quadratic.hpp"
#include "pinch/exact/rational.hpp"

namespace pinch {

/// Raised when two closed forms of the same quantity disagree.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class Scalar>
struct BasicSpectrum {
  std::vector<Scalar> mu;

  std::size_t size() const { return mu.size(); }
};

using EigenSpectrum = BasicSpectrum<Rational>;

/// f_k = sum_i mu_i^k for k = 1..k_max (f_1 = H, f_2 = S).
template <class Scalar>
std::vector<Scalar> power_sums(const BasicSpectrum<Scalar>& spec, int k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  std::vector<Scalar> f(static_cast<std::size_t>(k_max), Scalar(0));
  for (const Scalar& m : spec.mu) {
    Scalar p = m;
    for (int k = 0; k < k_max; ++k) {
      f[static_cast<std::size_t>(k)] += p;
      p *= m;
    }
  }
  return f;
}

/// t_ij = mu_i mu_j (mu_i - mu_j).
template <class Scalar>
Scalar t_ij(const BasicSpectrum<Scalar>& spec, std::size_t i, std::size_t j) {
  return spec.mu[i] * spec.mu[j] * (spec.mu[i] - spec.mu[j]);
}

/// G = sum_ij t_ij^2, checked against 2 (S f4 - f3^2).
template <class Scalar>
Scalar gap_G(const BasicSpectrum<Scalar>& spec) {
  Scalar direct(0);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    for (std::size_t j = 0; j < spec.size(); ++j) {
      Scalar t = t_ij(spec, i, j);
      direct += t * t;
    }
  }
  if (spec.size() == 0) return direct;
  auto f = power_sums(spec, 4);
  Scalar closed = Scalar(2) * (f[1] * f[3] - f[2] * f[2]);
  if (!(direct == closed)) throw IdentityViolation("sum t_ij^2 != 2(S f4 - f3^2)");
  return direct;
}

/// F = S^2 - S - lambda f3, exactly.
template <class Scalar>
Scalar f_lambda_gap(const BasicSpectrum<Scalar>& spec, const Rational& lambda) {
  auto f = power_sums(spec, 3);
  return f[1] * f[1] - f[1] - Scalar(lambda) * f[2];
}

/// R_ijkl = h_ik h_jl - h_il h_jk in the diagonal frame.
Rational gauss_curvature(const EigenSpectrum& spec, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

class Grad3 {
 public:
  explicit Grad3(std::size_t n = 0) : n_(n), data_(n * n * n, Rational(0)) {}

  /// Averages `raw` over all six index permutations.
  static Grad3 symmetrized(const Grad3& raw);

  std::size_t dim() const { return n_; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }
  bool is_symmetric() const;
  /// |nabla A|^2 = sum h_ijk^2.
  Rational norm_squared() const;
  Grad3 scaled(const Rational& c) const;

 private:
  std::size_t n_;
  std::vector<Rational> data_;
};

class Hess4 {
 public:
  explicit Hess4(std::size_t n = 0) : n_(n), data_(n * n * n * n, Rational(0)) {}

  /// Averages `raw` over the six permutations of its first three indices.
  static Hess4 symmetrized(const Hess4& raw);

  std::size_t dim() const { return n_; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  bool is_first_three_symmetric() const;

 private:
  std::size_t n_;
  std::vector<Rational> data_;
};

struct ContractionSet {
  Rational S;
  Rational f3;
  Rational f4;
  Rational G;
  Rational B1;
  Rational B2;
  Rational C;
  Rational gradA2;
};

/// B1, B2, C by the full index contraction with h_ij = mu_i delta_ij as a
/// matrix, checked against the diagonal shortcuts
///   B1 = sum h_ijk^2 mu_k^2,  B2 = sum h_ijk^2 mu_i mu_j,  C = sum h_ijk^2 mu_k.
/// Throws std::invalid_argument on dimension mismatch, IdentityViolation if
/// the routes disagree.
ContractionSet contractions(const EigenSpectrum& spec, const Grad3& g);

struct CBoundWitness {
  bool holds = false;
  Rational c_squared;
  Rational s_times_grad_squared;
};
/// C^2 <= S |nabla A|^4, the squared form of |C| <= |A| |nabla A|^2.
CBoundWitness check_c_bound(const EigenSpectrum& spec, const Grad3& g);

enum class LemmaOutcome { pass, indeterminate, counterexample };
const char* to_string(LemmaOutcome o);

struct LemmaWitness {
  LemmaOutcome outcome = LemmaOutcome::indeterminate;
  /// Enclosure of (S + C1 G^{1/3}) |nabla A|^2 - 3 (B1 - 2 B2) at the last precision tried.
  Interval slack;
  int precision_used = kDefaultPrecision;
  Rational lhs;  // 3 (B1 - 2 B2)
};
/// 3 (B1 - 2 B2) <= (S + C1 G^{1/3}) |nabla A|^2, evaluated on certified
/// enclosures, escalating the precision (doubling) up to `max_precision`.
LemmaWitness check_dx_lemma(const EigenSpectrum& spec, const Grad3& g, int precision = kDefaultPrecision,
                            int max_precision = 1024);

struct SymmetrizationGap {
  Rational gap;    // sum h^2 - sum u^2, u the cyclic average
  Rational bound;  // (3/4) sum_{i != j} (h_ijij - h_jiji)^2
};
/// Throws std::invalid_argument if h4 is not symmetric in its first three indices.
SymmetrizationGap symmetrization_gap(const Hess4& h4);

}  // namespace pinch
