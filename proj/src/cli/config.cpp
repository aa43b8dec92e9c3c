#include "pinch/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pinch::cli {

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::markdown: return "markdown";
    case OutputFormat::both: return "both";
  }
  return "json";
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "markdown") return OutputFormat::markdown;
  if (text == "both") return OutputFormat::both;
  throw UsageError("format must be json, markdown or both, got '" + text + "'");
}

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(what + ": cannot parse '" + text + "' as a rational (" + e.what() + ")");
  }
}

void RunConfig::validate() const {
  if (precision_bits < 64) throw UsageError("precision_bits must be >= 64");
  if (trials < 1) throw UsageError("trials must be >= 1");
  if (max_dim < 1 || max_dim > 8) throw UsageError("max_dim must lie in 1..8");
  if (max_precision_bits < precision_bits) throw UsageError("max_precision_bits must be >= precision_bits");
  if (model_dim < 1) throw UsageError("model_dim must be >= 1");
  if (delta.sign() < 0) throw UsageError("delta must be nonnegative");
  try {
    ProofParams p = params;
    p.delta = delta;
    p.validate();
    search.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

namespace {

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw UsageError("unknown key '" + it.key() + "' in " + where);
}

Rational get_rational(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if (!v.is_string()) throw UsageError(key + " must be a string such as \"1/18\"");
  return parse_rational(v.get<std::string>(), key);
}

template <class T>
T get_integer(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw UsageError(key + " must be an integer");
  return v.get<T>();
}

std::uint64_t get_seed(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) return v.get<std::uint64_t>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      std::size_t pos = 0;
      unsigned long long x = std::stoull(s, &pos);
      if (pos == s.size() && s.find('-') == std::string::npos) return x;
    } catch (const std::exception&) {
    }
  }
  throw UsageError(key + " must be an unsigned 64-bit integer");
}

AxisRange get_range(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
    throw UsageError("search." + key + " must be a pair of rational strings");
  return {parse_rational(v[0].get<std::string>(), key), parse_rational(v[1].get<std::string>(), key)};
}

Json range_json(const AxisRange& r) { return Json::array({r.lo.str(), r.hi.str()}); }

SearchPoint get_point(const Json& j) {
  check_keys(j, {"sigma", "epsilon", "kappa"}, "search.extra_points entry");
  return {get_rational(j, "sigma"), get_rational(j, "epsilon"), get_rational(j, "kappa")};
}

}  // namespace

RunConfig config_from_json(const Json& j) {
  check_keys(j,
             {"precision_bits", "trials", "seed", "search", "delta", "params", "lambdas", "output_path", "format",
              "max_dim", "max_precision_bits", "threads", "model_dim", "model_random_lambdas"},
             "config");
  RunConfig c;
  try {
    if (j.contains("precision_bits")) c.precision_bits = get_integer<int>(j, "precision_bits");
    if (j.contains("trials")) {
      long long t = get_integer<long long>(j, "trials");
      if (t < 1) throw UsageError("trials must be >= 1");
      c.trials = static_cast<std::size_t>(t);
    }
    if (j.contains("seed")) c.seed = get_seed(j, "seed");
    if (j.contains("delta")) c.delta = get_rational(j, "delta");
    if (j.contains("params")) {
      const Json& p = j.at("params");
      check_keys(p, {"sigma", "epsilon", "kappa"}, "params");
      if (p.contains("sigma")) c.params.sigma = get_rational(p, "sigma");
      if (p.contains("epsilon")) c.params.epsilon = get_rational(p, "epsilon");
      if (p.contains("kappa")) c.params.kappa = get_rational(p, "kappa");
    }
    if (j.contains("lambdas")) {
      const Json& l = j.at("lambdas");
      if (!l.is_array()) throw UsageError("lambdas must be an array of rational strings");
      for (const Json& x : l) {
        if (!x.is_string()) throw UsageError("lambdas must be an array of rational strings");
        c.lambdas.push_back(parse_rational(x.get<std::string>(), "lambdas"));
      }
    }
    if (j.contains("search")) {
      const Json& s = j.at("search");
      check_keys(s,
                 {"sigma", "epsilon", "kappa", "grid_resolution", "refine_iterations", "refine_shrink", "seed",
                  "restarts", "extra_points"},
                 "search");
      if (s.contains("sigma")) c.search.sigma = get_range(s, "sigma");
      if (s.contains("epsilon")) c.search.epsilon = get_range(s, "epsilon");
      if (s.contains("kappa")) c.search.kappa = get_range(s, "kappa");
      if (s.contains("grid_resolution")) c.search.grid_resolution = get_integer<int>(s, "grid_resolution");
      if (s.contains("refine_iterations")) c.search.refine_iterations = get_integer<int>(s, "refine_iterations");
      if (s.contains("refine_shrink")) c.search.refine_shrink = get_rational(s, "refine_shrink");
      if (s.contains("seed")) c.search.seed = get_seed(s, "seed");
      if (s.contains("restarts")) c.search.restarts = get_integer<int>(s, "restarts");
      if (s.contains("extra_points")) {
        const Json& e = s.at("extra_points");
        if (!e.is_array()) throw UsageError("search.extra_points must be an array");
        c.search.extra_points.clear();
        for (const Json& x : e) c.search.extra_points.push_back(get_point(x));
      }
    }
    if (j.contains("output_path")) {
      if (!j.at("output_path").is_string()) throw UsageError("output_path must be a string");
      c.output_path = j.at("output_path").get<std::string>();
    }
    if (j.contains("format")) {
      if (!j.at("format").is_string()) throw UsageError("format must be a string");
      c.format = parse_format(j.at("format").get<std::string>());
    }
    if (j.contains("max_dim")) c.max_dim = get_integer<std::size_t>(j, "max_dim");
    if (j.contains("max_precision_bits")) c.max_precision_bits = get_integer<int>(j, "max_precision_bits");
    if (j.contains("threads")) c.threads = get_integer<unsigned>(j, "threads");
    if (j.contains("model_dim")) c.model_dim = get_integer<int>(j, "model_dim");
    if (j.contains("model_random_lambdas"))
      c.model_random_lambdas = get_integer<std::size_t>(j, "model_random_lambdas");
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return c;
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["precision_bits"] = c.precision_bits;
  j["trials"] = c.trials;
  j["seed"] = std::to_string(c.seed);
  j["delta"] = c.delta.str();
  j["params"] = {{"sigma", c.params.sigma.str()}, {"epsilon", c.params.epsilon.str()},
                 {"kappa", c.params.kappa.str()}};
  Json lambdas = Json::array();
  for (const Rational& l : c.lambdas) lambdas.push_back(l.str());
  j["lambdas"] = lambdas;
  Json extra = Json::array();
  for (const SearchPoint& p : c.search.extra_points)
    extra.push_back({{"sigma", p.sigma.str()}, {"epsilon", p.epsilon.str()}, {"kappa", p.kappa.str()}});
  j["search"] = {{"sigma", range_json(c.search.sigma)},
                 {"epsilon", range_json(c.search.epsilon)},
                 {"kappa", range_json(c.search.kappa)},
                 {"grid_resolution", c.search.grid_resolution},
                 {"refine_iterations", c.search.refine_iterations},
                 {"refine_shrink", c.search.refine_shrink.str()},
                 {"seed", std::to_string(c.search.seed)},
                 {"restarts", c.search.restarts},
                 {"extra_points", extra}};
  j["output_path"] = c.output_path;
  j["format"] = to_string(c.format);
  j["max_dim"] = c.max_dim;
  j["max_precision_bits"] = c.max_precision_bits;
  j["model_dim"] = c.model_dim;
  j["model_random_lambdas"] = c.model_random_lambdas;
  return j;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

}  // namespace pinch::cli
