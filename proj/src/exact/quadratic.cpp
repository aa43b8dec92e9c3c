#include "pinch/exact/quadratic.hpp"

namespace pinch {

const char* to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

RadicandMismatch::RadicandMismatch(const Rational& lhs, const Rational& rhs)
    : std::invalid_argument("quadratic numbers from different fields: sqrt(" + lhs.str() +
                            ") vs sqrt(" + rhs.str() + ")") {}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_.sign() < 0) throw std::domain_error("negative radicand " + d_.str());
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& d) { return {Rational(0), Rational(1), d}; }

std::optional<Rational> QuadraticNumber::rational_value() const {
  if (is_rational()) return a_;
  if (auto root = rational_sqrt(d_)) return a_ + b_ * *root;
  return std::nullopt;
}

Sign QuadraticNumber::sign() const {
  int sa = a_.sign();
  int sb = d_.is_zero() ? 0 : b_.sign();
  if (sb == 0) return sign_of(sa);
  if (sa == 0 || sa == sb) return sign_of(sb);
  // Opposite signs: the larger of a^2 and b^2 d wins.
  Rational a2 = a_ * a_;
  Rational b2d = b_ * b_ * d_;
  if (a2 == b2d) return Sign::zero;
  return a2 > b2d ? sign_of(sa) : sign_of(sb);
}

Interval QuadraticNumber::enclose(int precision) const {
  if (is_rational()) return Interval::from_rational(a_, precision);
  Interval root = pinch::sqrt(Interval::from_rational(d_, precision));
  return Interval::from_rational(a_, precision) + Interval::from_rational(b_, precision) * root;
}

std::optional<QuadraticNumber> QuadraticNumber::sqrt() const {
  if (sign() == Sign::negative) return std::nullopt;
  if (auto q = rational_value()) {
    if (auto root = rational_sqrt(*q)) return QuadraticNumber(*root, Rational(0), d_);
    // A rational x has sqrt(x) = v sqrt(d) when x/d is a rational square.
    if (!d_.is_zero()) {
      if (auto v = rational_sqrt(*q / d_)) return QuadraticNumber(Rational(0), *v, d_);
    }
    return std::nullopt;
  }
  // (u + v sqrt d)^2 = a + b sqrt d  <=>  u^2 + v^2 d = a, 2uv = b, hence
  // u^2 = (a +- sqrt(a^2 - b^2 d)) / 2.
  auto disc = rational_sqrt(norm());
  if (!disc) return std::nullopt;
  for (const Rational& u2 : {(a_ + *disc) / Rational(2), (a_ - *disc) / Rational(2)}) {
    auto u = rational_sqrt(u2);
    if (!u || u->is_zero()) continue;
    QuadraticNumber candidate(*u, b_ / (Rational(2) * *u), d_);
    if (candidate.sign() == Sign::negative) candidate = -candidate;
    if (candidate * candidate == *this) return candidate;
  }
  return std::nullopt;
}

std::string QuadraticNumber::str() const {
  if (is_rational()) return a_.str();
  std::string out = a_.is_zero() ? "" : a_.str() + (b_.sign() < 0 ? " - " : " + ");
  Rational mag = a_.is_zero() ? b_ : abs(b_);
  if (mag != Rational(1)) out += (mag == Rational(-1) ? std::string("-") : mag.str() + "*");
  return out + "sqrt(" + d_.str() + ")";
}

Rational QuadraticNumber::common_radicand(const QuadraticNumber& rhs) const {
  if (rhs.is_rational()) return d_.is_zero() ? rhs.d_ : d_;
  if (is_rational()) return rhs.d_;
  if (d_ != rhs.d_) throw RadicandMismatch(d_, rhs.d_);
  return d_;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  d_ = common_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
  d_ = common_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  Rational d = common_radicand(rhs);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = std::move(d);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  Rational d = common_radicand(rhs);
  if (rhs.sign() == Sign::zero) throw std::domain_error("quadratic number division by zero");
  if (auto q = rhs.rational_value()) {
    a_ /= *q;
    b_ /= *q;
    d_ = std::move(d);
    return *this;
  }
  // Multiply through by the conjugate; the norm is nonzero because d is not a square.
  Rational n = rhs.norm();
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  return compare(x, y) == Sign::zero;
}

Sign compare(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    Rational d = x.is_rational() ? y.radicand() : x.radicand();
    return QuadraticNumber(x.a() - y.a(), x.b() - y.b(), d).sign();
  }
  // x - y = u + r sqrt(d2) with u = (a - a') + b sqrt(d1) in Q(sqrt d1).
  QuadraticNumber u(x.a() - y.a(), x.b(), x.radicand());
  const Rational r = -y.b();
  const Rational& d2 = y.radicand();
  Sign su = u.sign();
  Sign sr = d2.is_zero() ? Sign::zero : sign_of(r.sign());
  if (sr == Sign::zero) return su;
  if (su == Sign::zero || su == sr) return sr;
  // Opposite signs: compare |u| with |r| sqrt(d2) through u^2 - r^2 d2.
  Sign st = (u * u - QuadraticNumber(r * r * d2)).sign();
  if (st == Sign::zero) return Sign::zero;
  return st == Sign::positive ? su : sr;
}

}  // namespace pinch
