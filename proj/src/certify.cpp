#include "pinch/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

namespace pinch {

namespace {

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

// enclosure < 0 strictly
Verdict strictly_negative(std::string name, Interval enclosure, bool gating = true) {
  Verdict v{std::move(name), enclosure, enclosure.certainly_negative(), gating, ""};
  if (!v.pass) v.reason = enclosure.certainly_nonnegative() ? "violated" : kIndeterminate;
  return v;
}

Verdict strictly_positive(std::string name, Interval enclosure, bool gating = true) {
  Verdict v{std::move(name), enclosure, enclosure.certainly_positive(), gating, ""};
  if (!v.pass) v.reason = enclosure.certainly_nonpositive() ? "violated" : kIndeterminate;
  return v;
}

// enclosure <= bound (non-strict, as printed for the eta threshold)
Verdict at_most(std::string name, Interval enclosure, const Rational& bound, bool gating) {
  Verdict v{std::move(name), enclosure, enclosure.certainly_at_most(bound), gating, ""};
  if (!v.pass) v.reason = enclosure.certainly_greater_than(bound) ? "violated" : kIndeterminate;
  return v;
}

Verdict strictly_below(std::string name, Interval enclosure, const Rational& bound, bool gating) {
  Verdict v{std::move(name), enclosure, enclosure.certainly_less_than(bound), gating, ""};
  if (!v.pass) v.reason = enclosure.lo() >= bound ? "violated" : kIndeterminate;
  return v;
}

}  // namespace

bool Certificate::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.gating || v.pass; });
}

const Verdict* Certificate::find(std::string_view name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

bool identical(const Certificate& a, const Certificate& b) {
  if (!(a.params == b.params) || a.precision != b.precision || a.theorem != b.theorem ||
      a.verdicts.size() != b.verdicts.size() || a.delta_sup.has_value() != b.delta_sup.has_value())
    return false;
  if (a.delta_sup && !identical(*a.delta_sup, *b.delta_sup)) return false;
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    const Verdict& x = a.verdicts[i];
    const Verdict& y = b.verdicts[i];
    if (x.name != y.name || x.pass != y.pass || x.gating != y.gating || x.reason != y.reason ||
        !identical(x.enclosure, y.enclosure))
      return false;
  }
  return true;
}

Rational default_eta_threshold() { return frac(1, 200); }

Certificate certify_point(const ProofParams& p, Theorem theorem, int precision, const Rational& eta_threshold) {
  namespace vn = verdict_names;
  CoefficientSet c = theorem == Theorem::shrinker ? theorem1_coefficients(p, precision)
                                                  : theorem2_coefficients(p, precision);
  Certificate cert;
  cert.params = p;
  cert.precision = precision;
  cert.theorem = theorem;

  cert.verdicts.push_back(strictly_positive(vn::kThetaPositive, c.theta));
  cert.verdicts.push_back(strictly_negative(vn::kGradientPinch, c.coef_gradient_pinch));
  cert.verdicts.push_back(strictly_negative(vn::kConstantNegative, c.coef_constant));
  Interval closing = c.coef_constant + c.coef_delta_slope * p.delta;
  if (theorem == Theorem::shrinker) {
    cert.verdicts.push_back(strictly_negative(vn::kShrinkerClosing, closing));
  } else {
    cert.verdicts.push_back(strictly_negative(vn::kLambdaClosing, closing + c.eta));
  }

  cert.verdicts.push_back(strictly_below(vn::kConstantBelowPrinted, c.coef_constant, frac(-452, 1000), false));
  cert.verdicts.push_back(strictly_below(vn::kSlopeBelowPrinted, c.coef_delta_slope, frac(803, 100), false));
  if (theorem == Theorem::lambda_hypersurface)
    cert.verdicts.push_back(at_most(vn::kEtaBelowThreshold, c.eta, eta_threshold, false));

  cert.delta_sup = delta_max(c);
  return cert;
}

// ------------------------------------------------------------------ search

SearchPoint SearchConfig::reference_search_point() {
  ProofParams p = ProofParams::reference_point();
  return {p.sigma, p.epsilon, p.kappa};
}

void SearchConfig::validate() const {
  for (const AxisRange* r : {&sigma, &epsilon, &kappa}) {
    if (r->lo.sign() <= 0 || r->hi.sign() <= 0)
      throw std::invalid_argument("search bounds must be strictly positive");
    if (r->lo > r->hi) throw std::invalid_argument("search bounds out of order");
  }
  if (grid_resolution < 2) throw std::invalid_argument("grid_resolution must be >= 2");
  if (refine_iterations < 0) throw std::invalid_argument("refine_iterations must be >= 0");
  if (restarts < 0) throw std::invalid_argument("restarts must be >= 0");
  if (refine_shrink.sign() <= 0 || refine_shrink >= Rational(1))
    throw std::invalid_argument("refine_shrink must lie in (0, 1)");
}

bool SearchConfig::contains(const SearchPoint& p) const {
  return sigma.lo <= p.sigma && p.sigma <= sigma.hi && epsilon.lo <= p.epsilon && p.epsilon <= epsilon.hi &&
         kappa.lo <= p.kappa && p.kappa <= kappa.hi;
}

namespace {

constexpr double kInfeasible = -std::numeric_limits<double>::infinity();
// Slack demanded of the float estimates during refinement, so that snapping
// to nearby rationals rarely crosses the A = 0 boundary.
constexpr double kRefineMargin = 1e-7;

struct Scored {
  double score;
  SearchPoint point;
};

bool lex_less(const SearchPoint& a, const SearchPoint& b) {
  return std::tie(a.sigma, a.epsilon, a.kappa) < std::tie(b.sigma, b.epsilon, b.kappa);
}

// Higher score first; ties broken by lexicographic (sigma, epsilon, kappa).
bool rank_before(const Scored& a, const Scored& b) {
  if (a.score != b.score) return a.score > b.score;
  return lex_less(a.point, b.point);
}

double score(double s, double e, double k, double margin) {
  FloatCoefficients f = estimate_coefficients(s, e, k);
  return f.feasible(margin) ? f.delta_sup() : kInfeasible;
}

double score(const SearchPoint& p, double margin) {
  return score(p.sigma.to_double(), p.epsilon.to_double(), p.kappa.to_double(), margin);
}

Rational axis_value(const AxisRange& r, int i, int resolution) {
  return r.lo + (r.hi - r.lo) * Rational(i) / Rational(resolution - 1);
}

Rational clamp(const Rational& x, const AxisRange& r) { return std::clamp(x, r.lo, r.hi); }

SearchPoint snap(const std::array<double, 3>& x, const SearchConfig& cfg) {
  const BigInt max_den(1000000);
  return {clamp(limit_denominator(Rational::from_double(x[0]), max_den), cfg.sigma),
          clamp(limit_denominator(Rational::from_double(x[1]), max_den), cfg.epsilon),
          clamp(limit_denominator(Rational::from_double(x[2]), max_den), cfg.kappa)};
}

constexpr std::array<std::array<int, 3>, 6> kPollDirections = {{
    {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
}};

// Compass search: poll +-step along each axis, move to the best improving
// poll, otherwise contract every step by `shrink`.
std::array<double, 3> compass_search(std::array<double, 3> x, const SearchConfig& cfg) {
  const std::array<std::pair<double, double>, 3> box = {
      std::pair{cfg.sigma.lo.to_double(), cfg.sigma.hi.to_double()},
      std::pair{cfg.epsilon.lo.to_double(), cfg.epsilon.hi.to_double()},
      std::pair{cfg.kappa.lo.to_double(), cfg.kappa.hi.to_double()}};
  std::array<double, 3> step{};
  for (int a = 0; a < 3; ++a) step[a] = (box[a].second - box[a].first) / (cfg.grid_resolution - 1);
  const double shrink = cfg.refine_shrink.to_double();
  double best = score(x[0], x[1], x[2], kRefineMargin);

  for (int it = 0; it < cfg.refine_iterations; ++it) {
    std::array<double, 3> best_poll = x;
    double best_poll_score = best;
    for (const std::array<int, 3>& dir : kPollDirections) {
      std::array<double, 3> y = x;
      for (int a = 0; a < 3; ++a) y[a] = std::clamp(x[a] + dir[a] * step[a], box[a].first, box[a].second);
      double s = score(y[0], y[1], y[2], kRefineMargin);
      if (s > best_poll_score) {
        best_poll_score = s;
        best_poll = y;
      }
    }
    if (best_poll_score > best) {
      best = best_poll_score;
      x = best_poll;
    } else {
      for (double& s : step) s *= shrink;
      if (std::max({step[0], step[1], step[2]}) < 1e-13) break;
    }
  }
  return x;
}

SearchPoint midpoint(const SearchPoint& a, const SearchPoint& b) {
  const Rational half(BigInt(1), BigInt(2));
  return {(a.sigma + b.sigma) * half, (a.epsilon + b.epsilon) * half, (a.kappa + b.kappa) * half};
}

ProofParams to_params(const SearchPoint& p, const Rational& delta) {
  return {p.sigma, p.epsilon, p.kappa, delta, Rational(0)};
}

}  // namespace

SearchResult optimize_delta(const SearchConfig& cfg, const Rational& delta, int precision) {
  cfg.validate();
  const int res = cfg.grid_resolution;
  SearchResult result;

  std::vector<Rational> sig(res), eps(res), kap(res);
  for (int i = 0; i < res; ++i) {
    sig[i] = axis_value(cfg.sigma, i, res);
    eps[i] = axis_value(cfg.epsilon, i, res);
    kap[i] = axis_value(cfg.kappa, i, res);
  }
  std::vector<double> sig_d(res), eps_d(res), kap_d(res);
  for (int i = 0; i < res; ++i) {
    sig_d[i] = sig[i].to_double();
    eps_d[i] = eps[i].to_double();
    kap_d[i] = kap[i].to_double();
  }

  std::vector<Scored> feasible;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      for (int k = 0; k < res; ++k) {
        ++result.grid_points;
        double s = score(sig_d[i], eps_d[j], kap_d[k], 0.0);
        if (s != kInfeasible) feasible.push_back({s, {sig[i], eps[j], kap[k]}});
      }
    }
  }
  result.feasible_grid_points = feasible.size();

  std::vector<Scored> extras;
  for (const SearchPoint& p : cfg.extra_points) {
    if (!cfg.contains(p)) continue;
    double s = score(p, 0.0);
    if (s != kInfeasible) extras.push_back({s, p});
  }
  if (feasible.empty() && extras.empty())
    throw EmptyFeasibleSet("no point of the search box satisfies theta > 0, A < 0, B < 0");

  std::sort(feasible.begin(), feasible.end(), rank_before);

  std::vector<SearchPoint> to_certify;
  const std::size_t top_grid = std::min<std::size_t>(3, feasible.size());
  for (std::size_t i = 0; i < top_grid; ++i) to_certify.push_back(feasible[i].point);
  for (const Scored& e : extras) to_certify.push_back(e.point);

  // Refinement starts: the best ranked candidate, then seeded random points.
  std::vector<Scored> ranked = feasible;
  ranked.insert(ranked.end(), extras.begin(), extras.end());
  std::sort(ranked.begin(), ranked.end(), rank_before);
  std::vector<SearchPoint> starts{ranked.front().point};
  std::mt19937_64 rng(cfg.seed);
  // 53 high bits to [0, 1); fixed mapping, independent of the library's distributions.
  auto unit = [](std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; };
  for (int r = 0; r < cfg.restarts; ++r) {
    std::array<double, 3> x{};
    const AxisRange* axes[3] = {&cfg.sigma, &cfg.epsilon, &cfg.kappa};
    for (int a = 0; a < 3; ++a) {
      double lo = axes[a]->lo.to_double(), hi = axes[a]->hi.to_double();
      x[a] = lo + unit(rng) * (hi - lo);
    }
    SearchPoint p = snap(x, cfg);
    if (score(p, kRefineMargin) != kInfeasible) starts.push_back(p);
  }

  for (const SearchPoint& start : starts) {
    std::array<double, 3> x0{start.sigma.to_double(), start.epsilon.to_double(), start.kappa.to_double()};
    SearchPoint refined = snap(compass_search(x0, cfg), cfg);
    // Retreat toward the (feasible) start until the snapped point certifies.
    for (int attempt = 0; attempt < 40; ++attempt) {
      Certificate probe = certify_point(to_params(refined, delta), Theorem::shrinker, precision);
      if (probe.delta_sup) break;
      refined = midpoint(refined, start);
    }
    to_certify.push_back(refined);
  }

  std::optional<std::size_t> best;
  for (const SearchPoint& p : to_certify) {
    result.trace.push_back(certify_point(to_params(p, delta), Theorem::shrinker, precision));
    const Certificate& c = result.trace.back();
    if (!c.delta_sup) continue;
    if (!best || c.delta_sup->lo() > result.trace[*best].delta_sup->lo()) best = result.trace.size() - 1;
  }
  if (!best) throw EmptyFeasibleSet("no candidate point certified theta > 0, A < 0, B < 0");
  result.best = result.trace[*best];
  return result;
}

// ------------------------------------------------------------------ gamma

const char* to_string(GammaMode mode) { return mode == GammaMode::sharp ? "sharp" : "paper_threshold"; }

Interval GammaBracket::enclosure(int precision) const { return Interval::from_bounds(pass, fail, precision); }

BigInt gamma_grid_denominator() { return BigInt(1000000000); }

namespace {

struct ProbeOutcome {
  bool pass;
  Interval eta;
};

ProbeOutcome probe(const ProofParams& base, const Rational& lambda, GammaMode mode, int precision,
                   const Rational& eta_threshold) {
  ProofParams p = base;
  p.lambda = lambda;
  Certificate cert = certify_point(p, Theorem::lambda_hypersurface, precision, eta_threshold);
  Interval eta = eta_lambda(p, precision);
  if (mode == GammaMode::sharp) return {cert.passed(), eta};

  namespace vn = verdict_names;
  bool base_ok = cert.find(vn::kThetaPositive)->pass && cert.find(vn::kGradientPinch)->pass &&
                 cert.find(vn::kConstantNegative)->pass;
  CoefficientSet c = theorem1_coefficients(p, precision);
  Interval closing_with_budget = c.coef_constant + c.coef_delta_slope * p.delta + eta_threshold;
  return {base_ok && closing_with_budget.certainly_negative() && eta.certainly_at_most(eta_threshold), eta};
}

void check_monotone(std::vector<GammaProbe> trace) {
  std::sort(trace.begin(), trace.end(), [](const GammaProbe& a, const GammaProbe& b) { return a.lambda < b.lambda; });
  bool seen_fail = false;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!trace[i].pass) seen_fail = true;
    if (trace[i].pass && seen_fail)
      throw NonMonotoneTrace("verdict passes at lambda = " + trace[i].lambda.str() +
                             " after failing at a smaller lambda");
    if (i > 0 && trace[i - 1].eta.lo() > trace[i].eta.hi())
      throw NonMonotoneTrace("eta decreases between lambda = " + trace[i - 1].lambda.str() + " and " +
                             trace[i].lambda.str());
  }
}

}  // namespace

GammaBracket gamma_max(const ProofParams& p, GammaMode mode, int precision, const Rational& eta_threshold) {
  GammaBracket out;
  out.mode = mode;
  ProofParams base = p;
  base.lambda = Rational(0);
  base.validate();

  const BigInt den = gamma_grid_denominator();
  auto run = [&](const BigInt& n) {
    Rational lambda(n, den);
    ProbeOutcome o = probe(base, lambda, mode, precision, eta_threshold);
    out.trace.push_back({lambda, o.pass, o.eta});
    return o.pass;
  };

  if (!run(BigInt(0)))
    throw InfeasibleAtZero(std::string("the ") + to_string(mode) +
                           " condition does not certify at lambda = 0 for this point");

  BigInt lo = 0;
  BigInt hi = den / 1000;  // lambda = 10^-3
  const BigInt cap = den * 1024;
  while (run(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > cap) throw NonMonotoneTrace("condition still certifies at lambda = 1024; no bracket found");
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (run(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  check_monotone(out.trace);
  out.pass = Rational(lo, den);
  out.fail = Rational(hi, den);
  return out;
}

}  // namespace pinch
