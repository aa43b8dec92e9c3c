#pragma once

// Run configuration. On disk this is one JSON document; every rational is a
// string ("p/q", an integer, or a decimal literal) so replay is bit-exact.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pinch/certify.hpp"

namespace pinch::cli {

using Json = nlohmann::ordered_json;

/// Bad config file, bad flag value or unusable path. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, markdown, both };

const char* to_string(OutputFormat f);
OutputFormat parse_format(const std::string& text);

struct RunConfig {
  int precision_bits = kDefaultPrecision;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  SearchConfig search;
  Rational delta = Rational(1) / Rational(18);
  /// sigma, epsilon, kappa of the certified point. `params.delta` and
  /// `params.lambda` are ignored; delta and the lambda list above rule.
  ProofParams params = ProofParams::reference_point();
  std::vector<Rational> lambdas;
  std::string output_path;
  OutputFormat format = OutputFormat::json;

  // Property suites.
  std::size_t max_dim = 6;
  int max_precision_bits = 1024;
  /// 0 means hardware concurrency; results do not depend on it.
  unsigned threads = 0;

  // Model checks.
  int model_dim = 5;
  std::size_t model_random_lambdas = 1000;

  /// Throws UsageError.
  void validate() const;
};

Rational parse_rational(const std::string& text, const std::string& what);

/// Missing keys keep their defaults. Unknown keys are rejected.
RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& c);
RunConfig load_config(const std::string& path);

}  // namespace pinch::cli
