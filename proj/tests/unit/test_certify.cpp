#include "doctest.h"
#include "oracles.hpp"
#include "pinch/certify.hpp"

using namespace pinch;
namespace vn = pinch::verdict_names;

namespace {
Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }
const ProofParams kReference = ProofParams::reference_point();

SearchConfig small_search() {
  SearchConfig cfg;
  cfg.grid_resolution = 9;
  cfg.refine_iterations = 60;
  cfg.restarts = 2;
  return cfg;
}
}  // namespace

TEST_CASE("certify the reference point (theorem 1)") {
  Certificate c = certify_point(kReference, Theorem::shrinker);
  CHECK(c.passed());
  for (const char* name : {vn::kThetaPositive, vn::kGradientPinch, vn::kConstantNegative, vn::kShrinkerClosing}) {
    const Verdict* v = c.find(name);
    REQUIRE(v);
    CHECK(v->pass);
    CHECK(v->gating);
  }
  CHECK(c.find(vn::kConstantBelowPrinted)->pass);
  CHECK(!c.find(vn::kConstantBelowPrinted)->gating);
  CHECK(c.find(vn::kSlopeBelowPrinted)->pass);
  CHECK(!c.find(vn::kLambdaClosing));
  REQUIRE(c.delta_sup);
  CHECK(oracle::agrees(*c.delta_sup, oracle::kDeltaSup));
}

TEST_CASE("a gap beyond the supremum fails the closing verdict") {
  ProofParams p = kReference;
  p.delta = q(6, 100);
  Certificate c = certify_point(p, Theorem::shrinker);
  CHECK(!c.passed());
  const Verdict* v = c.find(vn::kShrinkerClosing);
  CHECK(!v->pass);
  CHECK(v->reason == "violated");
  CHECK(c.find(vn::kThetaPositive)->pass);
}

TEST_CASE("straddling enclosures are indeterminate, not passes") {
  // Just below the supremum the closing margin is about 1.4e-5, below what
  // 16-bit arithmetic resolves.
  ProofParams p = kReference;
  p.delta = q(5634, 100000);
  Certificate c = certify_point(p, Theorem::shrinker, 16);
  const Verdict* v = c.find(vn::kShrinkerClosing);
  CHECK(!v->pass);
  CHECK(v->reason == kIndeterminate);
  CHECK(!c.passed());
  CHECK(certify_point(p, Theorem::shrinker, 256).passed());
}

TEST_CASE("theorem 2 at lambda 0 reproduces theorem 1") {
  Certificate t1 = certify_point(kReference, Theorem::shrinker);
  Certificate t2 = certify_point(kReference, Theorem::lambda_hypersurface);
  CHECK(t2.passed());
  for (const Verdict& v : t1.verdicts) {
    const Verdict* w = v.name == vn::kShrinkerClosing ? t2.find(vn::kLambdaClosing) : t2.find(v.name);
    REQUIRE(w);
    CHECK(identical(v.enclosure, w->enclosure));
    CHECK(v.pass == w->pass);
  }
  const Verdict* eta = t2.find(vn::kEtaBelowThreshold);
  REQUIRE(eta);
  CHECK(eta->enclosure.hi() == Rational(0));
}

TEST_CASE("theorem 2 verdicts in lambda") {
  ProofParams p = kReference;
  p.lambda = q(1, 10000);
  CHECK(certify_point(p, Theorem::lambda_hypersurface).passed());
  p.lambda = q(1, 100);
  Certificate c = certify_point(p, Theorem::lambda_hypersurface);
  CHECK(!c.passed());
  CHECK(!c.find(vn::kLambdaClosing)->pass);
  CHECK(c.find(vn::kLambdaClosing)->reason == "violated");
}

TEST_CASE("certificates replay bit-exactly") {
  ProofParams p = kReference;
  p.lambda = q(3, 10000);
  CHECK(identical(certify_point(p, Theorem::lambda_hypersurface), certify_point(p, Theorem::lambda_hypersurface)));
}

TEST_CASE("search config validation") {
  SearchConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.grid_resolution = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = SearchConfig{};
  cfg.sigma = {Rational(0), Rational(1)};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = SearchConfig{};
  cfg.kappa = {q(1, 10), q(1, 20)};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = SearchConfig{};
  cfg.refine_shrink = Rational(1);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK(SearchConfig{}.contains(SearchConfig::reference_search_point()));
}

TEST_CASE("optimizer finds a certified gap at least as large as the reference point's") {
  SearchResult r = optimize_delta(small_search());
  CHECK(r.best.passed());
  REQUIRE(r.best.delta_sup);
  CHECK(r.best.delta_sup->lo() >= certify_point(kReference, Theorem::shrinker).delta_sup->lo());
  CHECK(r.grid_points == 9 * 9 * 9);
  CHECK(r.feasible_grid_points > 0);
  for (const Certificate& c : r.trace)
    if (c.passed()) CHECK(identical(c, certify_point(c.params, c.theorem, c.precision)));
}

TEST_CASE("optimizer is deterministic") {
  SearchResult a = optimize_delta(small_search());
  SearchResult b = optimize_delta(small_search());
  CHECK(identical(a.best, b.best));
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) CHECK(identical(a.trace[i], b.trace[i]));
}

TEST_CASE("degenerate box at the reference point") {
  SearchConfig cfg = small_search();
  cfg.sigma = {kReference.sigma, kReference.sigma};
  cfg.epsilon = {kReference.epsilon, kReference.epsilon};
  cfg.kappa = {kReference.kappa, kReference.kappa};
  SearchResult r = optimize_delta(cfg);
  REQUIRE(r.best.delta_sup);
  CHECK(oracle::agrees(*r.best.delta_sup, oracle::kDeltaSup));
  CHECK(r.best.params == kReference);
}

TEST_CASE("box without feasible points") {
  SearchConfig cfg = small_search();
  cfg.sigma = {Rational(5), Rational(6)};
  CHECK_THROWS_AS(optimize_delta(cfg), EmptyFeasibleSet);
}

TEST_CASE("gamma brackets") {
  GammaBracket sharp = gamma_max(kReference, GammaMode::sharp);
  GammaBracket threshold = gamma_max(kReference, GammaMode::paper_threshold);
  CHECK(sharp.fail - sharp.pass <= Rational(BigInt(1), gamma_grid_denominator()));
  CHECK(threshold.fail - threshold.pass <= Rational(BigInt(1), gamma_grid_denominator()));
  CHECK(sharp.pass > q(3, 10000));
  CHECK(sharp.pass < q(4, 10000));
  CHECK(threshold.pass > q(2, 10000));
  CHECK(threshold.pass < q(3, 10000));
  CHECK(threshold.pass <= sharp.pass);

  ProofParams at = kReference;
  at.lambda = sharp.pass;
  CHECK(certify_point(at, Theorem::lambda_hypersurface).passed());
  at.lambda = sharp.fail;
  CHECK(!certify_point(at, Theorem::lambda_hypersurface).passed());
  for (const GammaProbe& g : threshold.trace)
    if (g.pass) CHECK(g.eta.certainly_at_most(default_eta_threshold()));
  CHECK(sharp.enclosure().contains(sharp.pass));
}

TEST_CASE("gamma errors") {
  ProofParams p = kReference;
  p.delta = q(6, 100);
  CHECK_THROWS_AS(gamma_max(p, GammaMode::sharp), InfeasibleAtZero);
  p.delta = q(563, 10000);  // slack about 3e-4 instead of 6e-3
  GammaBracket tiny = gamma_max(p, GammaMode::sharp);
  CHECK(tiny.pass > Rational(0));
  CHECK(tiny.pass < q(1, 10000));
}
