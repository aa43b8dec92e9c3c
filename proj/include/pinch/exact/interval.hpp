#pragma once

/**
 * @file interval.hpp
 * @brief Validated interval arithmetic with outward (directed) rounding.
 *
 * Endpoints are dyadic floats at a fixed working precision. Every operation
 * rounds the lower endpoint toward -inf and the upper toward +inf, so the
 * result contains the exact real value of the expression whenever the inputs
 * contain theirs. Mixed-precision operations run at the larger precision.
 *
 * Sign decisions are three-valued: an enclosure that straddles zero is
 * indeterminate and never counts as positive or negative.
 */

#include <optional>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "pinch/exact/rational.hpp"

namespace pinch {

inline constexpr int kDefaultPrecision = 256;
inline constexpr int kMinPrecision = 2;

/// RAII owner of one mpfr_t.
class Dyadic {
 public:
  explicit Dyadic(int precision);
  Dyadic(const Dyadic& other);
  Dyadic(Dyadic&& other) noexcept;
  Dyadic& operator=(const Dyadic& other);
  Dyadic& operator=(Dyadic&& other) noexcept;
  ~Dyadic();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }

  /// Exact rational value (the dyadic m * 2^e).
  Rational to_rational() const;
  /// Lossless "m×2^e" rendering with odd m (or "0×2^0").
  std::string dyadic_string() const;
  static Dyadic parse_dyadic(std::string_view text, int precision);

 private:
  mpfr_t value_;
};

class Interval {
 public:
  /// The point interval [0, 0].
  explicit Interval(int precision = kDefaultPrecision);

  /// Tightest enclosure of q at `precision` bits (exact when q is representable).
  static Interval from_rational(const Rational& q, int precision = kDefaultPrecision);
  /// Hull of two rationals, rounded outward.
  static Interval from_bounds(const Rational& lo, const Rational& hi,
                              int precision = kDefaultPrecision);
  /// Rebuilds an interval from its serialized dyadic endpoints.
  static Interval from_dyadic_strings(std::string_view lo, std::string_view hi, int precision);
  /// Takes ownership of two endpoints; throws std::logic_error if lo > hi.
  static Interval from_dyadics(Dyadic lo, Dyadic hi);

  int precision() const { return lo_.precision(); }
  Rational lo() const { return lo_.to_rational(); }
  Rational hi() const { return hi_.to_rational(); }
  Rational width() const { return hi() - lo(); }
  const Dyadic& lower() const { return lo_; }
  const Dyadic& upper() const { return hi_; }

  double lo_double() const;
  double hi_double() const;
  double mid_double() const;
  /// Midpoint rendered with `digits` significant decimals (display only).
  std::string mid_decimal(int digits = 15) const;

  bool contains(const Rational& q) const;
  bool contains(const Interval& other) const;

  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_.get()) >= 0; }
  bool certainly_nonpositive() const { return mpfr_sgn(hi_.get()) <= 0; }
  bool certainly_less_than(const Rational& q) const { return mpfr_cmp_q(hi_.get(), q.get().get_mpq_t()) < 0; }
  bool certainly_at_most(const Rational& q) const { return mpfr_cmp_q(hi_.get(), q.get().get_mpq_t()) <= 0; }
  bool certainly_greater_than(const Rational& q) const { return mpfr_cmp_q(lo_.get(), q.get().get_mpq_t()) > 0; }
  /// -1, 0 (point zero), +1 when decided; nullopt when the enclosure straddles 0.
  std::optional<int> sign() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws std::domain_error if the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval operator+(const Interval& a, const Rational& b) { return a + from_rational(b, a.precision()); }
  friend Interval operator-(const Interval& a, const Rational& b) { return a - from_rational(b, a.precision()); }
  friend Interval operator*(const Interval& a, const Rational& b) { return a * from_rational(b, a.precision()); }
  friend Interval operator/(const Interval& a, const Rational& b) { return a / from_rational(b, a.precision()); }
  friend Interval operator+(const Rational& a, const Interval& b) { return from_rational(a, b.precision()) + b; }
  friend Interval operator-(const Rational& a, const Interval& b) { return from_rational(a, b.precision()) - b; }
  friend Interval operator*(const Rational& a, const Interval& b) { return from_rational(a, b.precision()) * b; }
  friend Interval operator/(const Rational& a, const Interval& b) { return from_rational(a, b.precision()) / b; }

  /// Endpoint-wise identity (same dyadic endpoints and precision).
  friend bool identical(const Interval& a, const Interval& b);

 private:
  Interval(Dyadic lo, Dyadic hi);

  Dyadic lo_;
  Dyadic hi_;
};

/// Enclosure of sqrt(t) for all t in x. Throws std::domain_error if x.lo < 0.
Interval sqrt(const Interval& x);
/// Enclosure of the real cube root of every t in x.
Interval cbrt(const Interval& x);
Interval abs(const Interval& x);
/// x*x with the dependency taken into account (never negative).
Interval square(const Interval& x);
Interval hull(const Interval& a, const Interval& b);

}  // namespace pinch
