#include <sstream>

#include <catch_amalgamated.hpp>

#include "jamsec/validate.hpp"

using namespace jamsec;

TEST_CASE("validation suites pass on the shipped implementation", "[validate]") {
  const ValidationReport report = run_validate();
  for (const SuiteResult& s : report.suites) {
    INFO(s.name << ": " << s.detail);
    CHECK(s.passed);
  }
  CHECK(report.all_passed());
  CHECK(report.suites.size() == 11);
}

TEST_CASE("a broken closed form is caught", "[validate]") {
  // Drop the 1/(1 - mu) factor on the non-empty levels and renormalize.
  const SteadyStateFn broken = [](double lambda, double mu, int cap) {
    BatteryChain chain = geo_geo1_steady_state(lambda, mu, cap);
    chain.steady.tail(cap) *= (1.0 - mu);
    chain.steady /= chain.steady.sum();
    return chain;
  };
  CHECK_FALSE(check_markov_closed_form(broken).passed);
  CHECK(check_markov_closed_form(&geo_geo1_steady_state).passed);
}

TEST_CASE("validation report is reproducible", "[validate]") {
  ValidationOptions options;
  options.seed = 7;
  std::ostringstream first, second;
  run_validate(options).print(first);
  run_validate(options).print(second);
  CHECK(first.str() == second.str());
  CHECK_FALSE(first.str().empty());
}
