#include <mpfr.h>

#include <memory>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "pinch/exact/interval.hpp"

using pinch::BigInt;
using pinch::Interval;
using pinch::Rational;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

// Integer square/cube roots by GMP, independent of the MPFR root path.
BigInt int_root(const BigInt& x, unsigned k) {
  BigInt r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

}  // namespace

TEST_CASE("from_rational") {
  Interval x = Interval::from_rational(q(1, 18));
  CHECK(x.contains(q(1, 18)));
  CHECK(x.width() <= Rational(1) / pow(Rational(2), 256));
  Interval z = Interval::from_rational(Rational(0));
  CHECK(z.lo() == Rational(0));
  CHECK(z.hi() == Rational(0));
  CHECK(Interval::from_rational(q(616, 1000)).contains(q(616, 1000)));
  Interval exact = Interval::from_rational(q(3, 8));
  CHECK(exact.lo() == q(3, 8));
  CHECK(exact.hi() == q(3, 8));
}

TEST_CASE("sqrt") {
  Interval four = sqrt(Interval::from_rational(Rational(4)));
  CHECK(four.contains(Rational(2)));
  CHECK(four.width() <= Rational(4) / pow(Rational(2), 256));
  CHECK(oracle::agrees(sqrt(Interval::from_rational(Rational(6))), oracle::kSqrt6));
  Interval zero = sqrt(Interval::from_rational(Rational(0)));
  CHECK(zero.lo() == Rational(0));
  CHECK(zero.hi() == Rational(0));
  CHECK_THROWS_AS(sqrt(Interval::from_rational(Rational(-1))), std::domain_error);
  CHECK_THROWS_AS(sqrt(Interval::from_bounds(Rational(-1), Rational(4))), std::domain_error);
}

TEST_CASE("cbrt") {
  CHECK(cbrt(Interval::from_rational(Rational(8))).contains(Rational(2)));
  CHECK(cbrt(Interval::from_rational(Rational(-8))).contains(Rational(-2)));
  Interval root6 = sqrt(Interval::from_rational(Rational(6)));
  CHECK(oracle::agrees(cbrt(Rational(21) * root6 + q(103, 2)), oracle::kCbrtRadicand));
}

TEST_CASE("roots of perfect powers against integer roots") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    BigInt base = BigInt(static_cast<long>(rng() % 1000000)) * BigInt(static_cast<long>(rng() % 1000000 + 1));
    BigInt sq = base * base, cu = base * base * base;
    CHECK(int_root(sq, 2) == base);
    CHECK(sqrt(Interval::from_rational(Rational(sq, BigInt(1)))).contains(Rational(int_root(sq, 2), BigInt(1))));
    CHECK(cbrt(Interval::from_rational(Rational(cu, BigInt(1)))).contains(Rational(int_root(cu, 3), BigInt(1))));
  }
}

TEST_CASE("basic operations and sign tests") {
  Interval a = Interval::from_bounds(Rational(1), Rational(2));
  Interval b = Interval::from_bounds(Rational(-3), Rational(-1));
  CHECK((a + b).contains(Rational(0)));
  CHECK((a * b).certainly_negative());
  CHECK((a - b).certainly_positive());
  CHECK((a / b).contains(q(-1, 3)));
  CHECK((a / b).contains(Rational(-2)));
  CHECK((a / b).certainly_less_than(q(-1, 3) + q(1, 1000000)));
  CHECK_THROWS_AS(a / Interval::from_bounds(Rational(-1), Rational(1)), std::domain_error);
  CHECK(square(Interval::from_bounds(Rational(-1), Rational(2))).lo() == Rational(0));
  CHECK(abs(b).lo() == Rational(1));
  CHECK(hull(a, b).lo() == Rational(-3));
  CHECK(!Interval::from_bounds(Rational(-1), Rational(1)).sign());
  CHECK(a.sign() == 1);
  CHECK(Interval::from_rational(Rational(0)).sign() == 0);
  CHECK(Interval::from_rational(q(1, 3)).certainly_less_than(q(1, 2)));
  CHECK(!Interval::from_rational(q(1, 2)).certainly_less_than(q(1, 2)));
  CHECK(Interval::from_rational(q(1, 2)).certainly_at_most(q(1, 2)));
}

TEST_CASE("dyadic strings round trip") {
  Interval x = sqrt(Interval::from_rational(Rational(2)));
  Interval y = Interval::from_dyadic_strings(x.lower().dyadic_string(), x.upper().dyadic_string(), x.precision());
  CHECK(identical(x, y));
  CHECK(Interval::from_rational(Rational(0)).lower().dyadic_string() == "0×2^0");
  CHECK(Interval::from_rational(Rational(12)).lower().dyadic_string() == "3×2^2");
  CHECK(Interval::from_rational(q(-3, 8)).lower().dyadic_string() == "-3×2^-3");
  CHECK_THROWS(Interval::from_dyadic_strings("1×2^0", "0×2^0", 64));
  CHECK_THROWS(Interval::from_dyadic_strings("banana", "1×2^0", 64));
}

// ---------------------------------------------------------------- property suite

namespace {

// Round-to-nearest MPFR at a high precision, used as the reference value.
struct Ref {
  mpfr_t v;
  Ref() { mpfr_init2(v, 640); }
  ~Ref() { mpfr_clear(v); }
  Ref(const Ref&) = delete;
  Ref& operator=(const Ref&) = delete;
};

enum class Op { leaf, add, sub, mul, div, sqrt, cbrt };

struct Node {
  Op op = Op::leaf;
  Rational leaf;
  std::unique_ptr<Node> a, b;
};

std::unique_ptr<Node> random_tree(std::mt19937_64& rng, int depth, bool radicals) {
  auto n = std::make_unique<Node>();
  if (depth == 0 || rng() % 4 == 0) {
    long p = static_cast<long>(rng() % 41) - 20;
    long d = static_cast<long>(rng() % 10) + 1;
    n->leaf = Rational(BigInt(p), BigInt(d));
    return n;
  }
  int choices = radicals ? 6 : 4;
  n->op = static_cast<Op>(1 + rng() % choices);
  n->a = random_tree(rng, depth - 1, radicals);
  if (n->op != Op::sqrt && n->op != Op::cbrt) n->b = random_tree(rng, depth - 1, radicals);
  return n;
}

struct Eval {
  Interval iv;
  std::optional<Rational> exact;
};

// Evaluates the tree; division by an enclosure containing 0 becomes a
// product and sqrt of a possibly negative argument becomes cbrt, in both
// the interval and the reference evaluation.
Eval eval(const Node& n, int prec, mpfr_t ref) {
  if (n.op == Op::leaf) {
    mpfr_set_q(ref, n.leaf.get().get_mpq_t(), MPFR_RNDN);
    return {Interval::from_rational(n.leaf, prec), n.leaf};
  }
  Ref ra, rb;
  Eval x = eval(*n.a, prec, ra.v);
  Eval y;
  if (n.b) y = eval(*n.b, prec, rb.v);
  Op op = n.op;
  if (op == Op::div && y.iv.contains(Rational(0))) op = Op::mul;
  if (op == Op::sqrt && !x.iv.certainly_nonnegative()) op = Op::cbrt;
  auto both = [&](auto f) -> std::optional<Rational> {
    if (x.exact && y.exact) return f(*x.exact, *y.exact);
    return std::nullopt;
  };
  switch (op) {
    case Op::add:
      mpfr_add(ref, ra.v, rb.v, MPFR_RNDN);
      return {x.iv + y.iv, both([](auto& u, auto& v) { return u + v; })};
    case Op::sub:
      mpfr_sub(ref, ra.v, rb.v, MPFR_RNDN);
      return {x.iv - y.iv, both([](auto& u, auto& v) { return u - v; })};
    case Op::mul:
      mpfr_mul(ref, ra.v, rb.v, MPFR_RNDN);
      return {x.iv * y.iv, both([](auto& u, auto& v) { return u * v; })};
    case Op::div:
      mpfr_div(ref, ra.v, rb.v, MPFR_RNDN);
      return {x.iv / y.iv, both([](auto& u, auto& v) { return u / v; })};
    case Op::sqrt: mpfr_sqrt(ref, ra.v, MPFR_RNDN); return {sqrt(x.iv), std::nullopt};
    case Op::cbrt: mpfr_cbrt(ref, ra.v, MPFR_RNDN); return {cbrt(x.iv), std::nullopt};
    case Op::leaf: break;
  }
  throw std::logic_error("unreachable");
}

bool contains_reference(const Interval& iv, mpfr_t ref) {
  // Reference error is far below 2^-500 relative; allow that much.
  Ref tol, lo, hi;
  mpfr_abs(tol.v, ref, MPFR_RNDU);
  mpfr_add_ui(tol.v, tol.v, 1, MPFR_RNDU);
  mpfr_mul_2si(tol.v, tol.v, -500, MPFR_RNDU);
  mpfr_sub(lo.v, iv.lower().get(), tol.v, MPFR_RNDD);
  mpfr_add(hi.v, iv.upper().get(), tol.v, MPFR_RNDU);
  return mpfr_lessequal_p(lo.v, ref) && mpfr_lessequal_p(ref, hi.v);
}

}  // namespace

TEST_CASE("containment on random expression trees") {
  std::mt19937_64 rng(2024);
  int failures = 0, exact_checked = 0, reference_checked = 0;
  for (int i = 0; i < 100000; ++i) {
    const bool radicals = i % 2 == 1;
    auto tree = random_tree(rng, 4, radicals);
    Ref ref;
    Eval e;
    try {
      e = eval(*tree, 256, ref.v);
    } catch (const std::domain_error&) {
      continue;  // exact division by zero inside an exact subtree
    }
    if (e.exact) {
      ++exact_checked;
      if (!e.iv.contains(*e.exact)) ++failures;
    } else {
      ++reference_checked;
      if (!contains_reference(e.iv, ref.v)) ++failures;
    }
  }
  CHECK(failures == 0);
  CHECK(exact_checked > 10000);
  CHECK(reference_checked > 10000);
}

TEST_CASE("doubling precision never widens an enclosure") {
  std::mt19937_64 rng(99);
  int widened = 0;
  for (int i = 0; i < 5000; ++i) {
    auto tree = random_tree(rng, 4, true);
    Ref r1, r2;
    try {
      Eval lo = eval(*tree, 128, r1.v);
      Eval hi = eval(*tree, 256, r2.v);
      if (hi.iv.width() > lo.iv.width()) ++widened;
    } catch (const std::domain_error&) {
    }
  }
  CHECK(widened == 0);
}
