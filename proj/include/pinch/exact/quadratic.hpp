#pragma once

/**
 * @file quadratic.hpp
 * @brief Exact arithmetic in a real quadratic field Q(sqrt(d)).
 *
 * A QuadraticNumber is a + b*sqrt(d) with rational a, b and a rational
 * radicand d >= 0 fixed per value. Arithmetic between two values with b != 0
 * requires equal radicands; a value with b == 0 is rational and lies in every
 * field, so it combines with anything and adopts the other operand's radicand.
 *
 * Signs and comparisons are decided exactly by rational comparisons of a^2
 * against b^2*d. `compare` also works across two different fields.
 */

#include <optional>
#include <stdexcept>
#include <string>

#include "pinch/exact/interval.hpp"
#include "pinch/exact/rational.hpp"

namespace pinch {

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }
inline int to_int(Sign s) { return static_cast<int>(s); }
const char* to_string(Sign s);

class RadicandMismatch : public std::invalid_argument {
 public:
  RadicandMismatch(const Rational& lhs, const Rational& rhs);
};

class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error if d < 0.
  QuadraticNumber(Rational a, Rational b, Rational d);

  /// 0 + 1*sqrt(d).
  static QuadraticNumber sqrt_of(const Rational& d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& radicand() const { return d_; }

  /// True when the irrational part is absent (b == 0).
  bool is_rational() const { return b_.is_zero(); }
  /// The rational value when b == 0 or d is a rational square.
  std::optional<Rational> rational_value() const;

  QuadraticNumber conjugate() const { return {a_, -b_, d_}; }
  /// Field norm a^2 - b^2 d.
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }

  Sign sign() const;
  /// Outward-rounded enclosure at `precision` bits.
  Interval enclose(int precision = kDefaultPrecision) const;
  /// Nonnegative square root inside the same field, if one exists.
  std::optional<QuadraticNumber> sqrt() const;

  /// "a + b*sqrt(d)" (or just "a" when rational).
  std::string str() const;

  QuadraticNumber operator-() const { return {-a_, -b_, d_}; }
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  /// Throws std::domain_error on division by zero.
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }

  /// Exact value equality (also across fields).
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);

 private:
  Rational common_radicand(const QuadraticNumber& rhs) const;

  Rational a_;
  Rational b_;
  Rational d_;
};

/// Exact sign of x - y; x and y may live in different quadratic fields.
Sign compare(const QuadraticNumber& x, const QuadraticNumber& y);

}  // namespace pinch
