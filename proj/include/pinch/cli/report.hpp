#pragma once

// JSON encoding of certificates, searches, gamma brackets, suites and model
// checks, plus the Markdown rendering of one or more finished reports.
//
// Intervals are written as dyadic endpoint strings "m×2^e" (exact, odd m);
// the "approx" field is a decimal string for reading only.

#include <string>
#include <string_view>
#include <vector>

#include "pinch/certify.hpp"
#include "pinch/cli/config.hpp"
#include "pinch/models.hpp"
#include "pinch/suites.hpp"

namespace pinch::cli {

inline constexpr const char* kToolVersion = "1.0.0";

Json interval_json(const Interval& x);
/// Inverse of interval_json; throws UsageError on malformed input.
Interval interval_from_json(const Json& j);

Json params_json(const ProofParams& p);
Json certificate_json(const Certificate& c);
Json search_json(const SearchResult& r);
Json gamma_json(const GammaBracket& b, int precision);
Json suite_json(const SuiteResult& s);
Json family_json(const FamilyCheck& f, int precision);

/// Short description of what a verdict asserts, for report tables.
std::string_view verdict_role(std::string_view name);

/// One Markdown document covering every report, in order.
std::string render_markdown(const std::vector<Json>& reports);

}  // namespace pinch::cli
