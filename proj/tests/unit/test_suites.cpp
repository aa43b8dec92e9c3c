#include "doctest.h"
#include "pinch/suites.hpp"

using namespace pinch;

namespace {
SuiteOptions small(unsigned threads) {
  SuiteOptions o;
  o.trials = 200;
  o.seed = 7;
  o.threads = threads;
  return o;
}

bool same(const SuiteResult& a, const SuiteResult& b) {
  if (a.name != b.name || a.trials != b.trials || a.failures != b.failures ||
      a.indeterminates != b.indeterminates || a.skipped != b.skipped || a.counterexamples != b.counterexamples ||
      a.notes.size() != b.notes.size())
    return false;
  for (std::size_t i = 0; i < a.notes.size(); ++i)
    if (a.notes[i].key != b.notes[i].key || a.notes[i].value != b.notes[i].value) return false;
  return true;
}

const SuiteNote* note(const SuiteResult& r, const std::string& key) {
  for (const SuiteNote& n : r.notes)
    if (n.key == key) return &n;
  return nullptr;
}
}  // namespace

TEST_CASE("all suites pass on a small run") {
  auto results = run_all_suites(small(1));
  REQUIRE(results.size() == 7);
  CHECK(results[0].name == suite_names::kGapIdentity);
  CHECK(results[6].name == suite_names::kFLambdaBounds);
  for (const SuiteResult& r : results) {
    INFO(r.name);
    CHECK(r.passed());
    CHECK(r.trials == 200);
    CHECK(r.counterexamples.empty());
  }
  const SuiteNote* c = note(results[3], "sharpest_constant");
  REQUIRE(c);
  CHECK(std::stod(c->value) >= 0.75);
  CHECK(note(results[4], "max_precision_used"));
}

TEST_CASE("results do not depend on the thread count") {
  auto one = run_all_suites(small(1));
  auto three = run_all_suites(small(3));
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(same(one[i], three[i]));
}

TEST_CASE("seeds change the draws") {
  SuiteOptions a = small(1), b = small(1);
  b.seed = 8;
  CHECK(note(run_symmetrization_suite(a), "sharpest_constant_exact")->value !=
        note(run_symmetrization_suite(b), "sharpest_constant_exact")->value);
}
