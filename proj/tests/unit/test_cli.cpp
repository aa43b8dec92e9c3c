#include <string>

#include "doctest.h"
#include "pinch/cli/commands.hpp"
#include "pinch/cli/config.hpp"
#include "pinch/cli/report.hpp"

using namespace pinch;
using namespace pinch::cli;

TEST_CASE("config round trip") {
  RunConfig c;
  c.precision_bits = 512;
  c.trials = 33;
  c.seed = 9;
  c.delta = Rational(BigInt(1), BigInt(20));
  c.lambdas = {Rational(BigInt(1), BigInt(10000)), Rational(BigInt(-3), BigInt(7))};
  c.search.grid_resolution = 5;
  c.search.extra_points.clear();
  c.format = OutputFormat::both;
  Json j = config_to_json(c);
  RunConfig back = config_from_json(j);
  CHECK(config_to_json(back) == j);
  CHECK(back.lambdas == c.lambdas);
  CHECK(back.search.extra_points.empty());
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(config_from_json(Json{{"bogus", 1}}), UsageError);
  CHECK_THROWS_AS(config_from_json(Json{{"delta", 0.05}}), UsageError);
  CHECK_THROWS_AS(config_from_json(Json{{"delta", "x"}}), UsageError);
  CHECK_THROWS_AS(config_from_json(Json{{"precision_bits", 8}}).validate(), UsageError);
  CHECK_THROWS_AS(parse_format("yaml"), UsageError);
  CHECK(config_from_json(Json{{"delta", "0.05"}}).delta == Rational(BigInt(1), BigInt(20)));
  CHECK(parse_rational("-3/6", "x") == Rational(BigInt(-1), BigInt(2)));
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), UsageError);
}

TEST_CASE("interval JSON round trip") {
  Interval x = sqrt(Interval::from_rational(Rational(7)));
  Json j = interval_json(x);
  CHECK(identical(interval_from_json(j), x));
  CHECK_THROWS_AS(interval_from_json(Json{{"lo", "1×2^0"}}), UsageError);
}

TEST_CASE("markdown uses role labels") {
  RunConfig cfg;
  cfg.lambdas = {Rational(BigInt(1), BigInt(10000))};
  CommandOutcome o = cmd_certify(cfg);
  CHECK(o.exit_code == kExitPass);
  o.report["wall_time_ms"] = 0;
  std::string md = render_markdown({o.report});
  for (const char* tag : {"Eq.", "eq.", "Lemma", "Theorem 1.", "§"}) CHECK(md.find(tag) == std::string::npos);
  CHECK(verdict_role(verdict_names::kShrinkerClosing) != verdict_role(verdict_names::kLambdaClosing));
}

TEST_CASE("commands") {
  RunConfig cfg;
  cfg.delta = Rational(BigInt(6), BigInt(100));
  CHECK(cmd_certify(cfg).exit_code == kExitFail);
  cfg = RunConfig{};
  cfg.model_random_lambdas = 20;
  CommandOutcome m = cmd_models(cfg);
  CHECK(m.exit_code == kExitPass);
  CHECK(m.report["status"] == "pass");
  CHECK(builtin_model_lambdas().size() == 10);
  cfg = RunConfig{};
  cfg.search.sigma = {Rational(5), Rational(6)};
  cfg.search.extra_points.clear();
  CHECK(cmd_optimize(cfg).exit_code == kExitFail);
}
