#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace gam {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int threads = 1;  // accepted for interface stability; results never depend on it
  bool deep = false;
};

/// One verified claim: `pass` is measured == expected. Tags: "frozen" for
/// values pinned from the manuscript, "derived" for independently computed
/// oracles, "trivial" for definitional facts, "reported" for informational
/// measurements that are recorded but not asserted.
struct Claim {
  std::string id;
  std::string anchor;  // short statement of the fact being checked
  bool pass = false;
  std::string measured;
  std::string expected;
  std::string tag;
  double ms = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<Claim> claims;

  bool all_pass() const;
  nlohmann::json to_json(bool with_timing = true) const;
  void print(std::ostream& os) const;
};

/// name in {field, group, construction, f1, f2, f3, f4, f5-classes, zp,
/// determinism}. Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

const std::vector<std::string>& suite_names();

}  // namespace gam
