#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qtrunc/report_io.hpp"

namespace qtrunc {

struct SuiteConfig {
  std::size_t order = 200;  // identity truncation order (AGJ caps at 60)
  long n_max = 1000;        // scan range for the proved families; conjecture scans cap at 800
};

struct SuiteEntry {
  std::string name;
  std::string category;  // table, identity, scan, conjecture, crosscheck, oracle
  bool conjecture = false;
  bool passed = false;
  std::string detail;
};

/// Runs the full verification battery; entries come back in a fixed order
/// regardless of how the work was scheduled.
std::vector<SuiteEntry> run_suite(const SuiteConfig& config);

Json to_json(const SuiteConfig& config, const std::vector<SuiteEntry>& entries);

}  // namespace qtrunc
