#include "pinch/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pinch/cli/report.hpp"
#include "pinch/random_tensors.hpp"

namespace pinch::cli {

namespace {

Json base_report(const char* command, const RunConfig& cfg) {
  Json r;
  r["tool_version"] = kToolVersion;
  r["command"] = command;
  r["status"] = "pass";
  r["exit_code"] = 0;
  r["config_echo"] = config_to_json(cfg);
  r["certificates"] = Json::array();
  r["search"] = nullptr;
  r["gamma"] = Json::array();
  r["property_suites"] = Json::array();
  r["models"] = nullptr;
  r["diagnostics"] = Json::array();
  return r;
}

CommandOutcome finish(Json report, bool pass) {
  const int code = pass ? kExitPass : kExitFail;
  report["status"] = pass ? "pass" : "fail";
  report["exit_code"] = code;
  return {code, std::move(report)};
}

ProofParams point(const RunConfig& cfg, const Rational& lambda = Rational(0)) {
  ProofParams p = cfg.params;
  p.delta = cfg.delta;
  p.lambda = lambda;
  return p;
}

void note_failures(Json& report, const Certificate& c) {
  for (const Verdict& v : c.verdicts) {
    if (v.gating && !v.pass)
      report["diagnostics"].push_back("theorem " + std::to_string(theorem_number(c.theorem)) + " at lambda=" +
                                      c.params.lambda.str() + ": " + v.name + " failed (" + v.reason + ")");
  }
}

}  // namespace

CommandOutcome cmd_certify(const RunConfig& cfg) {
  Json report = base_report("certify", cfg);
  bool pass = true;
  std::vector<Certificate> certs{certify_point(point(cfg), Theorem::shrinker, cfg.precision_bits)};
  for (const Rational& l : cfg.lambdas)
    certs.push_back(certify_point(point(cfg, l), Theorem::lambda_hypersurface, cfg.precision_bits));
  for (const Certificate& c : certs) {
    report["certificates"].push_back(certificate_json(c));
    note_failures(report, c);
    pass = pass && c.passed();
  }
  return finish(std::move(report), pass);
}

CommandOutcome cmd_optimize(const RunConfig& cfg) {
  Json report = base_report("optimize", cfg);
  try {
    SearchResult r = optimize_delta(cfg.search, cfg.delta, cfg.precision_bits);
    report["search"] = search_json(r);
    report["certificates"].push_back(certificate_json(r.best));
    note_failures(report, r.best);
    return finish(std::move(report), r.best.passed());
  } catch (const EmptyFeasibleSet& e) {
    report["diagnostics"].push_back(std::string("empty feasible set: ") + e.what());
    return finish(std::move(report), false);
  }
}

CommandOutcome cmd_gamma(const RunConfig& cfg) {
  Json report = base_report("gamma", cfg);
  Certificate base = certify_point(point(cfg), Theorem::lambda_hypersurface, cfg.precision_bits);
  report["certificates"].push_back(certificate_json(base));
  if (!base.passed()) {
    note_failures(report, base);
    report["diagnostics"].push_back("lambda = 0 does not certify at this point; no positive gamma");
    return finish(std::move(report), false);
  }
  bool pass = true;
  for (GammaMode mode : {GammaMode::sharp, GammaMode::paper_threshold}) {
    try {
      GammaBracket b = gamma_max(point(cfg), mode, cfg.precision_bits);
      report["gamma"].push_back(gamma_json(b, cfg.precision_bits));
      if (b.pass.sign() <= 0) {
        pass = false;
        report["diagnostics"].push_back(std::string(to_string(mode)) + ": no positive lambda certifies");
      }
    } catch (const std::runtime_error& e) {
      pass = false;
      report["diagnostics"].push_back(std::string(to_string(mode)) + ": " + e.what());
    }
  }
  return finish(std::move(report), pass);
}

CommandOutcome cmd_identities(const RunConfig& cfg) {
  Json report = base_report("identities", cfg);
  SuiteOptions opts;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.precision = cfg.precision_bits;
  opts.max_precision = cfg.max_precision_bits;
  opts.max_dim = cfg.max_dim;
  opts.delta = cfg.delta;
  opts.threads = cfg.threads;
  bool pass = true;
  for (const SuiteResult& s : run_all_suites(opts)) {
    report["property_suites"].push_back(suite_json(s));
    pass = pass && s.passed();
    if (s.indeterminates)
      report["diagnostics"].push_back(s.name + ": " + std::to_string(s.indeterminates) +
                                      " trials indeterminate at the precision cap");
  }
  return finish(std::move(report), pass);
}

std::vector<Rational> builtin_model_lambdas() {
  std::vector<Rational> out;
  for (const char* s : {"-2", "-1", "-1/2", "-1/4", "0", "1/4", "1/2", "3/4", "1", "2"})
    out.push_back(Rational::parse(s));
  return out;
}

CommandOutcome cmd_models(const RunConfig& cfg) {
  Json report = base_report("models", cfg);
  Json families = Json::array();
  bool pass = true;
  std::vector<Rational> lambdas = builtin_model_lambdas();
  lambdas.insert(lambdas.end(), cfg.lambdas.begin(), cfg.lambdas.end());
  for (const Rational& l : lambdas) {
    FamilyCheck f = check_family(l, cfg.model_dim);
    families.push_back(family_json(f, cfg.precision_bits));
    for (const std::string& p : f.problems) report["diagnostics"].push_back("lambda=" + l.str() + ": " + p);
    pass = pass && f.ok();
  }

  // Random rational lambdas over every k <= 8.
  constexpr int kRandomDim = 8;
  std::size_t failures = 0;
  Json bad = Json::array();
  for (std::size_t i = 0; i < cfg.model_random_lambdas; ++i) {
    TrialRng rng(trial_seed(cfg.seed, 101, i));
    Rational l = random_entry(rng);
    FamilyCheck f = check_family(l, kRandomDim);
    if (!f.ok()) {
      ++failures;
      if (bad.size() < kMaxReportedCounterexamples) bad.push_back("lambda=" + l.str() + ": " + f.problems.front());
    }
  }
  pass = pass && failures == 0;
  report["models"] = {{"families", families},
                      {"random", {{"count", cfg.model_random_lambdas}, {"n", kRandomDim}, {"failures", failures},
                                  {"counterexamples", bad}}}};
  return finish(std::move(report), pass);
}

std::vector<Json> load_reports(const std::vector<std::string>& paths) {
  std::vector<Json> out;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read report '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
      j = Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError("report '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("tool_version") || !j.contains("command"))
      throw UsageError("'" + path + "' is not a report produced by this tool");
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write output file '" + path + "'");
  out << text;
  if (!out) throw UsageError("failed while writing '" + path + "'");
}

std::string with_extension(const std::string& path, const char* ext) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? path.substr(0, dot) : path) + ext;
}

void emit(const RunConfig& cfg, const Json& report) {
  const std::string json = report.dump(2) + "\n";
  const std::string md = render_markdown({report});
  if (cfg.output_path.empty()) {
    if (cfg.format != OutputFormat::markdown) std::cout << json;
    if (cfg.format != OutputFormat::json) std::cout << md;
    return;
  }
  switch (cfg.format) {
    case OutputFormat::json: write_file(cfg.output_path, json); break;
    case OutputFormat::markdown: write_file(cfg.output_path, md); break;
    case OutputFormat::both:
      write_file(with_extension(cfg.output_path, ".json"), json);
      write_file(with_extension(cfg.output_path, ".md"), md);
      break;
  }
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Certified coefficient checks, searches, property suites and model classification."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<int> precision;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> delta;
  std::vector<std::string> lambdas;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<unsigned> threads;

  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--precision", precision, "Working precision in bits (>= 64)");
  app.add_option("--trials", trials, "Trials per property suite");
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--delta", delta, "Pinching gap, e.g. 1/18");
  app.add_option("--lambda", lambdas, "Lambda value, repeatable")->allow_extra_args(false);
  app.add_option("--out", out, "Output path");
  app.add_option("--format", format, "json, markdown or both");
  app.add_option("--threads", threads, "Worker threads for the suites (0 = all cores)");

  auto* certify = app.add_subcommand("certify", "Certify the configured point (theorem 1, and 2 per lambda)");
  auto* optimize = app.add_subcommand("optimize", "Search the box for the largest certified gap");
  auto* gamma = app.add_subcommand("gamma", "Bracket the largest certifiable lambda");
  auto* identities = app.add_subcommand("identities", "Run the randomized exact property suites");
  auto* models = app.add_subcommand("models", "Verify the model hypersurfaces");
  auto* report = app.add_subcommand("report", "Merge prior JSON reports into one Markdown document");
  std::vector<std::string> inputs;
  report->add_option("inputs", inputs, "JSON reports")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (report->parsed()) {
      std::string md = render_markdown(load_reports(inputs));
      if (out) {
        write_file(*out, md);
      } else {
        std::cout << md;
      }
      return kExitPass;
    }

    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (precision) cfg.precision_bits = *precision;
    if (trials) cfg.trials = *trials;
    if (seed) cfg.seed = *seed;
    if (delta) cfg.delta = parse_rational(*delta, "--delta");
    if (!lambdas.empty()) {
      cfg.lambdas.clear();
      for (const std::string& l : lambdas) cfg.lambdas.push_back(parse_rational(l, "--lambda"));
    }
    if (out) cfg.output_path = *out;
    if (format) cfg.format = parse_format(*format);
    if (threads) cfg.threads = *threads;
    cfg.validate();

    const auto start = std::chrono::steady_clock::now();
    CommandOutcome result;
    if (certify->parsed()) result = cmd_certify(cfg);
    else if (optimize->parsed()) result = cmd_optimize(cfg);
    else if (gamma->parsed()) result = cmd_gamma(cfg);
    else if (identities->parsed()) result = cmd_identities(cfg);
    else if (models->parsed()) result = cmd_models(cfg);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    result.report["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

    emit(cfg, result.report);
    for (const Json& d : result.report["diagnostics"]) std::cerr << d.get<std::string>() << "\n";
    return result.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace pinch::cli
