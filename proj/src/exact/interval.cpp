#include "pinch/exact/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pinch {

namespace {

constexpr std::string_view kTimesTwoPow = "\xC3\x97" "2^";  // "×2^"

int check_precision(int precision) {
  if (precision < kMinPrecision || precision > MPFR_PREC_MAX)
    throw std::invalid_argument("interval precision out of range: " + std::to_string(precision));
  return precision;
}

// Exact product/power at sufficient precision, then compared: used by the
// a posteriori root checks.
int exact_cmp_pow(mpfr_srcptr root, unsigned power, mpfr_srcptr target) {
  mpfr_t p;
  mpfr_init2(p, mpfr_get_prec(root) * static_cast<mpfr_prec_t>(power) + 8);
  int inexact = mpfr_pow_ui(p, root, power, MPFR_RNDN);
  if (inexact != 0) {
    mpfr_clear(p);
    throw std::logic_error("root check lost exactness");
  }
  int c = mpfr_cmp(p, target);
  mpfr_clear(p);
  return c;
}

}  // namespace

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(int precision) {
  mpfr_init2(value_, check_precision(precision));
  mpfr_set_zero(value_, 1);
}

Dyadic::Dyadic(const Dyadic& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Dyadic::Dyadic(Dyadic&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Dyadic& Dyadic::operator=(const Dyadic& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Dyadic& Dyadic::operator=(Dyadic&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Dyadic::~Dyadic() { mpfr_clear(value_); }

Rational Dyadic::to_rational() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("non-finite interval endpoint");
  if (mpfr_zero_p(value_)) return Rational(0);
  BigInt m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  if (e >= 0) {
    BigInt scale;
    mpz_mul_2exp(scale.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(scale, 1);
  }
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(-e));
  return Rational(m, den);
}

std::string Dyadic::dyadic_string() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("non-finite interval endpoint");
  if (mpfr_zero_p(value_)) return "0" + std::string(kTimesTwoPow) + "0";
  BigInt m;
  long e = static_cast<long>(mpfr_get_z_2exp(m.get_mpz_t(), value_));
  mp_bitcnt_t tz = mpz_scan1(m.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), tz);
  e += static_cast<long>(tz);
  return m.get_str() + std::string(kTimesTwoPow) + std::to_string(e);
}

Dyadic Dyadic::parse_dyadic(std::string_view text, int precision) {
  auto pos = text.find(kTimesTwoPow);
  if (pos == std::string_view::npos)
    throw std::invalid_argument("malformed dyadic literal: '" + std::string(text) + "'");
  BigInt m;
  if (m.set_str(std::string(text.substr(0, pos)), 10) != 0)
    throw std::invalid_argument("malformed dyadic mantissa: '" + std::string(text) + "'");
  std::string exp_text(text.substr(pos + kTimesTwoPow.size()));
  std::size_t used = 0;
  long e = 0;
  try {
    e = std::stol(exp_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != exp_text.size())
    throw std::invalid_argument("malformed dyadic exponent: '" + std::string(text) + "'");
  Dyadic out(precision);
  if (mpfr_set_z_2exp(out.get(), m.get_mpz_t(), e, MPFR_RNDN) != 0)
    throw std::invalid_argument("dyadic literal not representable at precision " +
                                std::to_string(precision));
  return out;
}

// ---------------------------------------------------------------- Interval

Interval::Interval(int precision) : lo_(precision), hi_(precision) {}

Interval Interval::from_dyadics(Dyadic lo, Dyadic hi) { return Interval(std::move(lo), std::move(hi)); }

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_cmp(lo_.get(), hi_.get()) > 0) throw std::logic_error("interval with lo > hi");
}

Interval Interval::from_rational(const Rational& q, int precision) {
  Dyadic lo(precision), hi(precision);
  mpfr_set_q(lo.get(), q.get().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get().get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_bounds(const Rational& lo, const Rational& hi, int precision) {
  if (lo > hi) throw std::invalid_argument("interval bounds out of order");
  Dyadic l(precision), h(precision);
  mpfr_set_q(l.get(), lo.get().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h.get(), hi.get().get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(l), std::move(h));
}

Interval Interval::from_dyadic_strings(std::string_view lo, std::string_view hi, int precision) {
  Dyadic l = Dyadic::parse_dyadic(lo, precision);
  Dyadic h = Dyadic::parse_dyadic(hi, precision);
  if (mpfr_cmp(l.get(), h.get()) > 0) throw std::invalid_argument("serialized interval has lo > hi");
  return Interval(std::move(l), std::move(h));
}

double Interval::lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

double Interval::mid_double() const {
  Dyadic mid(precision() + 1);
  mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mpfr_get_d(mid.get(), MPFR_RNDN);
}

std::string Interval::mid_decimal(int digits) const {
  Rational mid = (lo() + hi()) / Rational(2);
  return mid.decimal(digits);
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get().get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_.get(), q.get().get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& other) const {
  return mpfr_cmp(lo_.get(), other.lo_.get()) <= 0 && mpfr_cmp(hi_.get(), other.hi_.get()) >= 0;
}

std::optional<int> Interval::sign() const {
  if (certainly_positive()) return 1;
  if (certainly_negative()) return -1;
  if (mpfr_zero_p(lo_.get()) && mpfr_zero_p(hi_.get())) return 0;
  return std::nullopt;
}

Interval Interval::operator-() const {
  Dyadic lo(precision()), hi(precision());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator+(const Interval& a, const Interval& b) {
  int prec = std::max(a.precision(), b.precision());
  Dyadic lo(prec), hi(prec);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  int prec = std::max(a.precision(), b.precision());
  Dyadic lo(prec), hi(prec);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  int prec = std::max(a.precision(), b.precision());
  Dyadic lo(prec), hi(prec), t(prec);
  mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
  mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_.get()) <= 0 && mpfr_sgn(b.hi_.get()) >= 0)
    throw std::domain_error("interval division by an enclosure containing zero");
  int prec = std::max(a.precision(), b.precision());
  Dyadic lo(prec), hi(prec), t(prec);
  mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
  mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

bool identical(const Interval& a, const Interval& b) {
  return a.precision() == b.precision() && mpfr_equal_p(a.lo_.get(), b.lo_.get()) &&
         mpfr_equal_p(a.hi_.get(), b.hi_.get());
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lower().get()) < 0) throw std::domain_error("sqrt of an enclosure with lo < 0");
  int prec = x.precision();
  Dyadic lo(prec), hi(prec);
  mpfr_sqrt(lo.get(), x.lower().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.upper().get(), MPFR_RNDU);
  if (exact_cmp_pow(lo.get(), 2, x.lower().get()) > 0 || exact_cmp_pow(hi.get(), 2, x.upper().get()) < 0)
    throw std::logic_error("sqrt enclosure failed its endpoint check");
  return Interval::from_dyadics(std::move(lo), std::move(hi));
}

Interval cbrt(const Interval& x) {
  int prec = x.precision();
  Dyadic lo(prec), hi(prec);
  mpfr_cbrt(lo.get(), x.lower().get(), MPFR_RNDD);
  mpfr_cbrt(hi.get(), x.upper().get(), MPFR_RNDU);
  if (exact_cmp_pow(lo.get(), 3, x.lower().get()) > 0 || exact_cmp_pow(hi.get(), 3, x.upper().get()) < 0)
    throw std::logic_error("cbrt enclosure failed its endpoint check");
  return Interval::from_dyadics(std::move(lo), std::move(hi));
}

Interval abs(const Interval& x) {
  if (x.certainly_nonnegative()) return x;
  if (x.certainly_nonpositive()) return -x;
  Interval neg = -x;
  Rational hi = std::max(x.hi(), neg.hi());
  return Interval::from_bounds(Rational(0), hi, x.precision());
}

Interval square(const Interval& x) {
  Interval a = abs(x);
  return a * a;
}

Interval hull(const Interval& a, const Interval& b) {
  int prec = std::max(a.precision(), b.precision());
  Rational lo = std::min(a.lo(), b.lo());
  Rational hi = std::max(a.hi(), b.hi());
  return Interval::from_bounds(lo, hi, prec);
}

}  // namespace pinch
