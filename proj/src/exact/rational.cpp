#include "pinch/exact/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace pinch {

namespace {

BigInt pow10(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  BigInt out;
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  out.set_str(buf, 10);
  return out;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!den.empty() && (den.front() == '-' || den.front() == '+'))
      throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
    return Rational(parse_integer(num), parse_integer(den));
  }

  // Decimal with optional exponent.
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = parse_integer(text.substr(e + 1)).get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long scale = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    auto whole = mantissa.substr(0, dot);
    auto frac = mantissa.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    scale = static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa))
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  BigInt num(digits, 10);
  if (negative) num = -num;
  long shift = exponent - scale;
  if (shift >= 0) return Rational(num * pow10(static_cast<unsigned long>(shift)), 1);
  return Rational(num, pow10(static_cast<unsigned long>(-shift)));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite double has no rational value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (is_zero()) return "0";
  mpf_class f(value_, static_cast<mp_bitcnt_t>(digits * 4 + 64));
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<size_t>(digits));
  bool negative = !mant.empty() && mant.front() == '-';
  if (negative) mant.erase(0, 1);
  std::string out = negative ? "-" : "";
  if (exp <= 0) {
    out += "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
  } else if (static_cast<size_t>(exp) >= mant.size()) {
    out += mant + std::string(static_cast<size_t>(exp) - mant.size(), '0');
  } else {
    out += mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
  }
  return out;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), x.get().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpq_class& q = x.get();
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  BigInt num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rational(num, den);
}

Rational limit_denominator(const Rational& x, const BigInt& max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
  if (x.denominator() <= max_denominator) return x;

  // Convergents p0/q0, p1/q1 of the continued fraction of x.
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  BigInt n = x.numerator(), d = x.denominator();
  while (true) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    BigInt q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    BigInt p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    BigInt r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  BigInt k;
  mpz_fdiv_q(k.get_mpz_t(), BigInt(max_denominator - q0).get_mpz_t(), q1.get_mpz_t());
  Rational semi(p0 + k * p1, q0 + k * q1);
  Rational conv(p1, q1);
  return abs(semi - x) < abs(conv - x) ? semi : conv;
}

}  // namespace pinch
