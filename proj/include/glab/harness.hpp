#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "glab/io.hpp"

namespace glab {

struct SuiteSpec {
  std::string name;
  std::string algebra;  // empty: the suite's default case matrix
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  Json witness;  // null when passing
  double seconds = 0;
};

struct Report {
  std::string suite;
  std::string algebra;
  std::map<std::string, std::string> params;  // effective values, defaults filled in
  std::uint64_t seed = 0;
  std::string version;
  std::vector<Check> checks;  // sorted by name
  bool pass() const;
};

struct ParamInfo {
  std::string key;
  std::string fallback;
  std::string help;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  std::vector<ParamInfo> params;
};

const std::vector<SuiteInfo>& registered_suites();

// thrown when a single check runs longer than the time cap
class TimeCapExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

struct RunOptions {
  double time_cap = 0;  // seconds per check, 0 for none
};

// throws InputError for an unknown suite, bad parameter or bad algebra; BudgetExceeded on resource exhaustion
Report run_suite(const SuiteSpec& spec, const RunOptions& opt = {});

// "json" or "md"; timing is left out unless requested so reruns are byte-identical
std::string emit_report(const Report& r, const std::string& format, bool timing = false);
Json report_json(const Report& r, bool timing = false);

}  // namespace glab
