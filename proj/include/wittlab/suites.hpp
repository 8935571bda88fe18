#pragma once

#include <functional>
#include <string>

#include "wittlab/json_io.hpp"

namespace wittlab {

/// Parameters of one suite run. p/f pick the coefficient field (f > 1 uses
/// the default modulus), `laurent` switches the witt-core suites to
/// F_q((t)) witnesses, n/m are the levels, and the witness space is the
/// fixed seeded configuration from sampling.hpp.
struct SuiteSpec {
  std::string id;
  std::int64_t p = 2;
  int f = 1;
  bool laurent = true;
  int n = 2;
  int m = 2;
  int samples = 100;
  std::uint64_t seed = 1;
  int precision_slack = -1;
  WitnessSpace space;
};

struct SuiteFailure {
  int sample;
  Json witness;
};

struct SuiteReport {
  std::string id;
  std::string description;
  SuiteSpec spec;
  int samples = 0;
  std::vector<SuiteFailure> failures;
  Json notes = Json::object();  // suite-specific values worth reporting (e.g. anchors)
  double wall_ms = 0;

  bool passed() const { return failures.empty(); }
  Json to_json(bool include_wall = true) const;
};

struct SuiteDef {
  std::string id;
  // One statement tag in brackets plus the identity it checks.
  std::string description;
  SuiteSpec defaults;
  std::function<void(const SuiteSpec&, SuiteReport&)> run;
};

const std::vector<SuiteDef>& suite_catalog();
const SuiteDef* find_suite(const std::string& id);

/// Runs the suite; deterministic given the seed. Throws RingError for an
/// unknown id and BudgetError outside the (p, n) table.
SuiteReport run_suite(const SuiteSpec& spec);

}  // namespace wittlab
