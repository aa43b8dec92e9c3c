#include "pinch/suites.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "pinch/coefficients.hpp"
#include "pinch/random_tensors.hpp"
#include "pinch/spectral.hpp"

namespace pinch {

namespace {

enum class Status { pass, fail, indeterminate, skipped };

struct Outcome {
  Status status = Status::pass;
  std::string detail;
  // Suite-specific measurement, aggregated after all trials.
  std::optional<Rational> measure;
  int precision_used = 0;
};

using TrialFn = std::function<Outcome(TrialRng&)>;

// Distinct generator streams per suite.
enum Stream : std::uint64_t {
  kGapStream = 1,
  kRouteStream,
  kCBoundStream,
  kSymStream,
  kDxStream,
  kScalingStream,
  kFBoundsStream,
};

std::vector<Outcome> run_trials(const SuiteOptions& opts, std::uint64_t stream, const TrialFn& fn) {
  std::vector<Outcome> out(opts.trials);
  unsigned workers = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(opts.trials, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < opts.trials; i = next++) {
      TrialRng rng(trial_seed(opts.seed, stream, i));
      try {
        out[i] = fn(rng);
      } catch (const std::exception& e) {
        out[i] = {Status::fail, std::string("exception: ") + e.what(), std::nullopt, 0};
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return out;
}

SuiteResult aggregate(const char* name, const std::vector<Outcome>& outcomes) {
  SuiteResult r;
  r.name = name;
  r.trials = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    switch (o.status) {
      case Status::pass: break;
      case Status::skipped: ++r.skipped; break;
      case Status::indeterminate: ++r.indeterminates; break;
      case Status::fail:
        ++r.failures;
        if (r.counterexamples.size() < kMaxReportedCounterexamples)
          r.counterexamples.push_back("trial " + std::to_string(i) + ": " + o.detail);
        break;
    }
  }
  return r;
}

std::string describe(const EigenSpectrum& s) {
  std::ostringstream os;
  os << "mu=(";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.mu[i].str();
  os << ")";
  return os.str();
}

std::size_t draw_dim(TrialRng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(uniform_int(rng, static_cast<long>(lo), static_cast<long>(std::max(lo, hi))));
}

}  // namespace

SuiteResult run_gap_identity_suite(const SuiteOptions& opts) {
  auto outcomes = run_trials(opts, kGapStream, [&](TrialRng& rng) -> Outcome {
    EigenSpectrum s = random_spectrum(rng, draw_dim(rng, 1, opts.max_dim));
    Rational g = gap_G(s);  // throws IdentityViolation on mismatch
    if (g.sign() < 0) return {Status::fail, "G < 0 at " + describe(s), std::nullopt, 0};
    return {};
  });
  return aggregate(suite_names::kGapIdentity, outcomes);
}

SuiteResult run_contraction_route_suite(const SuiteOptions& opts) {
  auto outcomes = run_trials(opts, kRouteStream, [&](TrialRng& rng) -> Outcome {
    std::size_t n = draw_dim(rng, 1, opts.max_dim);
    EigenSpectrum s = random_spectrum(rng, n);
    Grad3 g = random_grad3(rng, n);
    contractions(s, g);
    return {};
  });
  return aggregate(suite_names::kContractionRoutes, outcomes);
}

SuiteResult run_c_bound_suite(const SuiteOptions& opts) {
  auto outcomes = run_trials(opts, kCBoundStream, [&](TrialRng& rng) -> Outcome {
    std::size_t n = draw_dim(rng, 1, opts.max_dim);
    EigenSpectrum s = random_spectrum(rng, n);
    Grad3 g = random_grad3(rng, n);
    CBoundWitness w = check_c_bound(s, g);
    if (!w.holds)
      return {Status::fail, "C^2=" + w.c_squared.str() + " > S|dA|^4=" + w.s_times_grad_squared.str(), std::nullopt,
              0};
    return {};
  });
  return aggregate(suite_names::kCBound, outcomes);
}

SuiteResult run_symmetrization_suite(const SuiteOptions& opts) {
  auto outcomes = run_trials(opts, kSymStream, [&](TrialRng& rng) -> Outcome {
    std::size_t n = draw_dim(rng, 2, opts.max_dim);
    Hess4 h = random_hess4(rng, n);
    SymmetrizationGap sg = symmetrization_gap(h);
    if (sg.gap < sg.bound)
      return {Status::fail, "n=" + std::to_string(n) + " gap=" + sg.gap.str() + " < bound=" + sg.bound.str(),
              std::nullopt, 0};
    Outcome o;
    if (!sg.bound.is_zero()) o.measure = sg.gap / (sg.bound * Rational(BigInt(4), BigInt(3)));
    return o;
  });
  SuiteResult r = aggregate(suite_names::kSymmetrization, outcomes);
  std::optional<Rational> sharpest;
  for (const Outcome& o : outcomes)
    if (o.measure && (!sharpest || *o.measure < *sharpest)) sharpest = o.measure;
  if (sharpest) {
    r.notes.push_back({"sharpest_constant", sharpest->decimal(12)});
    r.notes.push_back({"sharpest_constant_exact", sharpest->str()});
  }
  r.notes.push_back({"asserted_constant", "3/4"});
  return r;
}

SuiteResult run_dx_lemma_suite(const SuiteOptions& opts) {
  auto outcomes = run_trials(opts, kDxStream, [&](TrialRng& rng) -> Outcome {
    std::size_t n = draw_dim(rng, 1, opts.max_dim);
    EigenSpectrum s = random_spectrum(rng, n);
    Grad3 g = random_grad3(rng, n);
    LemmaWitness w = check_dx_lemma(s, g, opts.precision, opts.max_precision);
    Outcome o;
    o.precision_used = w.precision_used;
    if (w.outcome == LemmaOutcome::counterexample) {
      o.status = Status::fail;
      o.detail = "n=" + std::to_string(n) + " " + describe(s) + " slack_hi=" + std::to_string(w.slack.hi_double());
    } else if (w.outcome == LemmaOutcome::indeterminate) {
      o.status = Status::indeterminate;
    }
    return o;
  });
  SuiteResult r = aggregate(suite_names::kDxLemma, outcomes);
  int max_prec = opts.precision;
  std::size_t escalated = 0;
  for (const Outcome& o : outcomes) {
    max_prec = std::max(max_prec, o.precision_used);
    if (o.precision_used > opts.precision) ++escalated;
  }
  r.notes.push_back({"max_precision_used", std::to_string(max_prec)});
  r.notes.push_back({"escalated_trials", std::to_string(escalated)});
  return r;
}

SuiteResult run_scaling_suite(const SuiteOptions& opts) {
  auto outcomes = run_trials(opts, kScalingStream, [&](TrialRng& rng) -> Outcome {
    std::size_t n = draw_dim(rng, 1, opts.max_dim);
    EigenSpectrum s = random_spectrum(rng, n);
    Grad3 g = random_grad3(rng, n);
    Rational c = random_nonzero_entry(rng);
    EigenSpectrum cs = s;
    for (Rational& m : cs.mu) m *= c;
    ContractionSet a = contractions(s, g);
    ContractionSet b = contractions(cs, g.scaled(c));
    std::string bad;
    if (b.G != pow(c, 6) * a.G) bad += " G";
    if (b.B1 != pow(c, 4) * a.B1) bad += " B1";
    if (b.B2 != pow(c, 4) * a.B2) bad += " B2";
    if (b.C != pow(c, 3) * a.C) bad += " C";
    if (b.S != pow(c, 2) * a.S) bad += " S";
    if (!bad.empty()) return {Status::fail, "degree mismatch in" + bad + " at c=" + c.str(), std::nullopt, 0};
    return {};
  });
  return aggregate(suite_names::kScaling, outcomes);
}

SuiteResult run_f_lambda_bounds_suite(const SuiteOptions& opts) {
  auto outcomes = run_trials(opts, kFBoundsStream, [&](TrialRng& rng) -> Outcome {
    std::size_t n = draw_dim(rng, 1, opts.max_dim);
    EigenSpectrum dir = random_spectrum(rng, n);
    dir.mu[0] = random_nonzero_entry(rng);
    Rational lambda = random_entry(rng);
    Rational frac_in_band(BigInt(uniform_int(rng, 1, 99)), BigInt(100));

    // Scale the direction so that S lands at beta + frac * delta.
    Rational s0 = power_sums(dir, 2)[1];
    QuadraticNumber beta = beta_alpha(lambda).beta;
    double target = beta.enclose(64).mid_double() + (frac_in_band * opts.delta).to_double();
    Rational c = limit_denominator(Rational::from_double(std::sqrt(target / s0.to_double())), BigInt(1000000));
    EigenSpectrum s = dir;
    for (Rational& m : s.mu) m *= c;
    Rational S = power_sums(s, 2)[1];
    if (!in_pinching_band(QuadraticNumber(S), lambda, opts.delta)) return {Status::skipped, {}, std::nullopt, 0};

    QuadraticNumber F(f_lambda_gap(s, lambda));
    FLambdaBounds b = f_lambda_bounds(QuadraticNumber(S), lambda, opts.delta, opts.precision);
    std::string where = "lambda=" + lambda.str() + " " + describe(s);
    if (compare(F, b.upper) == Sign::positive) return {Status::fail, "F above upper bound, " + where, std::nullopt, 0};
    if (b.lower.exact) {
      if (compare(F, *b.lower.exact) == Sign::negative)
        return {Status::fail, "F below lower bound, " + where, std::nullopt, 0};
      return {};
    }
    Interval f = F.enclose(opts.precision);
    if ((f - b.lower.enclosure).certainly_nonnegative()) return {};
    if ((f - b.lower.enclosure).certainly_negative())
      return {Status::fail, "F below lower bound, " + where, std::nullopt, 0};
    return {Status::indeterminate, {}, std::nullopt, 0};
  });
  return aggregate(suite_names::kFLambdaBounds, outcomes);
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts) {
  return {run_gap_identity_suite(opts), run_contraction_route_suite(opts), run_c_bound_suite(opts),
          run_symmetrization_suite(opts), run_dx_lemma_suite(opts),        run_scaling_suite(opts),
          run_f_lambda_bounds_suite(opts)};
}

}  // namespace pinch
