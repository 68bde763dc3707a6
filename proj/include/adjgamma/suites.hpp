#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adjgamma/plancherel.hpp"

namespace adjgamma {

struct SuiteRecord {
  std::string identity;
  std::string group;
  std::string point;
  std::string lhs, rhs, ratio;
  int sign = 0;
  bool skipped = false;
  bool verdict = false;
  std::string note;
};

json suite_record_to_json(const SuiteRecord& r);

struct SuiteResult {
  std::string suite;
  std::vector<SuiteRecord> records;
  int passed() const;
  int failed() const;
  int skipped() const;
  bool ok() const { return failed() == 0; }
};

struct SuiteOptions {
  std::vector<GroupSpec> groups;  // empty: builtin_groups()
  int psi_order = -1;
  int cases = 200;
  std::uint64_t seed = 7;
  int bound_B = 3;
  int bound_D = 6;
  int samples = 8;
  int rank_bound = 4;
};

// propA1, thmA2, lemA3, lemA5, ratios, residual-discrete, q-to-one, fdeg-cross.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace adjgamma
