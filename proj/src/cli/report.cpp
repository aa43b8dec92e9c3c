#include "pinch/cli/report.hpp"

#include <sstream>

namespace pinch::cli {

Json interval_json(const Interval& x) {
  return {{"lo", x.lower().dyadic_string()},
          {"hi", x.upper().dyadic_string()},
          {"precision", x.precision()},
          {"approx", x.mid_decimal(12)}};
}

Interval interval_from_json(const Json& j) {
  try {
    return Interval::from_dyadic_strings(j.at("lo").get<std::string>(), j.at("hi").get<std::string>(),
                                         j.at("precision").get<int>());
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed interval: ") + e.what());
  }
}

Json params_json(const ProofParams& p) {
  return {{"sigma", p.sigma.str()},
          {"epsilon", p.epsilon.str()},
          {"kappa", p.kappa.str()},
          {"delta", p.delta.str()},
          {"lambda", p.lambda.str()}};
}

Json certificate_json(const Certificate& c) {
  Json verdicts = Json::array();
  for (const Verdict& v : c.verdicts) {
    verdicts.push_back({{"name", v.name},
                        {"pass", v.pass},
                        {"gating", v.gating},
                        {"reason", v.reason},
                        {"enclosure", interval_json(v.enclosure)}});
  }
  return {{"theorem", theorem_number(c.theorem)},
          {"params", params_json(c.params)},
          {"precision", c.precision},
          {"passed", c.passed()},
          {"verdicts", verdicts},
          {"delta_sup", c.delta_sup ? interval_json(*c.delta_sup) : Json(nullptr)}};
}

Json search_json(const SearchResult& r) {
  Json trace = Json::array();
  for (const Certificate& c : r.trace) trace.push_back(certificate_json(c));
  return {{"grid_points", r.grid_points},
          {"feasible_grid_points", r.feasible_grid_points},
          {"best", certificate_json(r.best)},
          {"trace", trace}};
}

Json gamma_json(const GammaBracket& b, int precision) {
  Json probes = Json::array();
  for (const GammaProbe& p : b.trace)
    probes.push_back({{"lambda", p.lambda.str()}, {"pass", p.pass}, {"eta", interval_json(p.eta)}});
  return {{"mode", to_string(b.mode)},
          {"pass", b.pass.str()},
          {"fail", b.fail.str()},
          {"width", (b.fail - b.pass).str()},
          {"enclosure", interval_json(b.enclosure(precision))},
          {"probes", probes}};
}

Json suite_json(const SuiteResult& s) {
  Json notes = Json::object();
  for (const SuiteNote& n : s.notes) notes[n.key] = n.value;
  return {{"name", s.name},
          {"trials", s.trials},
          {"failures", s.failures},
          {"indeterminates", s.indeterminates},
          {"skipped", s.skipped},
          {"counterexamples", s.counterexamples},
          {"notes", notes}};
}

Json family_json(const FamilyCheck& f, int precision) {
  Json models = Json::array();
  for (const Admissibility& a : f.admissibility) {
    ModelSurface m = make_model(f.lambda, a.k, f.n);
    models.push_back({{"k", a.k},
                      {"kind", to_string(m.kind)},
                      {"radius", m.radius.str()},
                      {"radius_enclosure", interval_json(m.radius.enclose(precision))},
                      {"s_k", a.s_k.str()},
                      {"versus_beta", to_string(a.versus_beta)},
                      {"admissible", a.admissible}});
  }
  return {{"lambda", f.lambda.str()},
          {"n", f.n},
          {"ok", f.ok()},
          {"admissible_k", f.admissible_k()},
          {"models", models},
          {"problems", f.problems}};
}

std::string_view verdict_role(std::string_view name) {
  namespace vn = verdict_names;
  if (name == vn::kThetaPositive) return "absorption weight is positive";
  if (name == vn::kGradientPinch) return "gradient coefficient is negative";
  if (name == vn::kConstantNegative) return "constant coefficient is negative";
  if (name == vn::kShrinkerClosing) return "pinching gap closes the integral inequality";
  if (name == vn::kLambdaClosing) return "gap still closes with the lambda perturbation";
  if (name == vn::kConstantBelowPrinted) return "constant coefficient below the printed bound";
  if (name == vn::kSlopeBelowPrinted) return "gap slope below the printed bound";
  if (name == vn::kEtaBelowThreshold) return "lambda perturbation within budget";
  return "";
}

namespace {

const Json& field(const Json& j, const char* key) {
  static const Json null_json;
  auto it = j.find(key);
  return it == j.end() ? null_json : *it;
}

std::string str_or(const Json& j, const char* key, const std::string& fallback = "") {
  const Json& v = field(j, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return fallback;
  return v.dump();
}

std::string interval_cell(const Json& iv) {
  if (!iv.is_object()) return "n/a";
  return "≈ " + str_or(iv, "approx") + " [`" + str_or(iv, "lo") + "`, `" + str_or(iv, "hi") + "`]";
}

void render_certificate(std::ostringstream& md, const Json& c) {
  const Json& p = field(c, "params");
  md << "Theorem " << field(c, "theorem").dump() << " at sigma=" << str_or(p, "sigma")
     << ", epsilon=" << str_or(p, "epsilon") << ", kappa=" << str_or(p, "kappa") << ", delta=" << str_or(p, "delta")
     << ", lambda=" << str_or(p, "lambda") << " (" << field(c, "precision").dump() << " bits): **"
     << (field(c, "passed").is_boolean() && field(c, "passed").get<bool>() ? "pass" : "fail") << "**\n\n";
  md << "| check | role | gating | enclosure | result |\n|---|---|---|---|---|\n";
  for (const Json& v : field(c, "verdicts")) {
    const std::string name = str_or(v, "name");
    const bool pass = field(v, "pass").is_boolean() && field(v, "pass").get<bool>();
    md << "| " << name << " | " << verdict_role(name) << " | "
       << (field(v, "gating").is_boolean() && field(v, "gating").get<bool>() ? "yes" : "no") << " | "
       << interval_cell(field(v, "enclosure")) << " | " << (pass ? "pass" : str_or(v, "reason", "fail")) << " |\n";
  }
  if (field(c, "delta_sup").is_object()) md << "\nLargest certified gap: " << interval_cell(field(c, "delta_sup")) << "\n";
  md << "\n";
}

}  // namespace

std::string render_markdown(const std::vector<Json>& reports) {
  std::ostringstream md;
  md << "# Certification report\n\n";
  for (const Json& r : reports) {
    md << "## `" << str_or(r, "command", "?") << "`: " << str_or(r, "status", "?") << " (exit "
       << field(r, "exit_code").dump() << ")\n\n";
    const Json& cfg = field(r, "config_echo");
    md << "Tool version " << str_or(r, "tool_version") << ", precision " << field(cfg, "precision_bits").dump()
       << " bits, seed " << str_or(cfg, "seed") << ", delta " << str_or(cfg, "delta") << ".\n\n";

    for (const Json& c : field(r, "certificates")) render_certificate(md, c);

    const Json& search = field(r, "search");
    if (search.is_object()) {
      md << "### Search\n\n" << field(search, "grid_points").dump() << " grid points, "
         << field(search, "feasible_grid_points").dump() << " feasible in the float scan, "
         << field(search, "trace").size() << " certified candidates. Best:\n\n";
      render_certificate(md, field(search, "best"));
    }

    const Json& gamma = field(r, "gamma");
    if (gamma.is_array() && !gamma.empty()) {
      md << "### Lambda budget\n\n| mode | certified | first failing | width |\n|---|---|---|---|\n";
      for (const Json& g : gamma)
        md << "| " << str_or(g, "mode") << " | " << str_or(g, "pass") << " | " << str_or(g, "fail") << " | "
           << str_or(g, "width") << " |\n";
      md << "\n";
    }

    const Json& suites = field(r, "property_suites");
    if (suites.is_array() && !suites.empty()) {
      md << "### Property suites\n\n| suite | trials | failures | indeterminate | skipped | notes |\n"
            "|---|---|---|---|---|---|\n";
      for (const Json& s : suites) {
        std::string notes;
        for (auto it = field(s, "notes").begin(); it != field(s, "notes").end(); ++it)
          notes += (notes.empty() ? "" : "; ") + it.key() + "=" + it.value().get<std::string>();
        md << "| " << str_or(s, "name") << " | " << field(s, "trials").dump() << " | " << field(s, "failures").dump()
           << " | " << field(s, "indeterminates").dump() << " | " << field(s, "skipped").dump() << " | " << notes
           << " |\n";
      }
      md << "\n";
    }

    const Json& models = field(r, "models");
    if (models.is_object()) {
      md << "### Model families\n\n| lambda | n | admissible k | status |\n|---|---|---|---|\n";
      for (const Json& f : field(models, "families")) {
        std::string ks;
        for (const Json& k : field(f, "admissible_k")) ks += (ks.empty() ? "" : ", ") + k.dump();
        md << "| " << str_or(f, "lambda") << " | " << field(f, "n").dump() << " | " << (ks.empty() ? "none" : ks)
           << " | " << (field(f, "ok").is_boolean() && field(f, "ok").get<bool>() ? "ok" : "FAIL") << " |\n";
      }
      const Json& rnd = field(models, "random");
      if (rnd.is_object())
        md << "\nRandom lambdas: " << field(rnd, "count").dump() << " families checked, "
           << field(rnd, "failures").dump() << " with problems.\n";
      md << "\n";
    }

    const Json& diag = field(r, "diagnostics");
    if (diag.is_array() && !diag.empty()) {
      md << "### Diagnostics\n\n";
      for (const Json& d : diag) md << "- " << (d.is_string() ? d.get<std::string>() : d.dump()) << "\n";
      md << "\n";
    }
  }
  return md.str();
}

}  // namespace pinch::cli
