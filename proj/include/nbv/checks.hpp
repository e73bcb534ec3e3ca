#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nbv/rational.hpp"
#include "nbv/shape.hpp"

namespace nbv {

using Json = nlohmann::ordered_json;

// One named identity check. Field names match the CLI flags and the sweep
// config file.
struct CheckSpec {
  std::string check;
  int n = 0;
  std::optional<int> m;
  std::vector<int> xi;
  std::optional<std::vector<Rat>> lambda;  // absent: sampled per trial
  std::optional<Rat> x;                    // absent: sampled per trial
  int trials = 10;
  std::uint64_t seed = 1;
  long long budget = 2000000;  // orbit-size cap
  int max_sites = 6;           // size budget on the variable count
  int max_cut = 3;             // size budget on the cut-block size
  bool inject_sign_flip = false;  // test hook: negates one side
};

struct TrialRecord {
  int index = 0;
  std::string digest;  // seed-derived point digest
  bool pass = false;
  // failure data; enough to rerun the single trial in isolation
  std::string monomial;
  std::string lhs;
  std::string rhs;
  std::string note;
  std::string point;
};

struct CheckReport {
  Json config;
  std::vector<TrialRecord> trials;
  int passed = 0;
  int failed = 0;

  bool all_passed() const { return failed == 0; }
  Json to_json() const;
};

struct SweepConfig {
  std::uint64_t seed = 1;
  int trials = 10;
  bool fail_fast = false;
  long long budget = 2000000;
  std::vector<CheckSpec> checks;
};

struct SweepReport {
  Json config;
  std::vector<CheckReport> checks;

  bool all_passed() const;
  Json to_json() const;
};

// Known check names, in the canonical order used by sweeps.
const std::vector<std::string>& known_checks();

CheckSpec check_spec_from_json(const Json& j);
SweepConfig sweep_config_from_json(const Json& j);

// Throws InvalidConfigError / BudgetExceededError / ResampleExhausted;
// identity failures are recorded in the report, not thrown.
CheckReport run_check(const CheckSpec& spec);
SweepReport run_sweep(const SweepConfig& config);

}  // namespace nbv
