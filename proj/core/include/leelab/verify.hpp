#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace leelab {

// One property check over a parameter grid.
struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  bool informational = false;  // reconciliation report; never fails the run
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> samples;  // first few failing parameter tuples
  std::string note;
};

enum class GridPreset { standard, quick };

struct VerifyOptions {
  GridPreset preset = GridPreset::standard;
  std::uint64_t seed = 42;
};

struct VerifyReport {
  std::string suite;
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
};

const std::vector<std::string>& verify_suites();  // volumes ... appendix, all
bool is_verify_suite(const std::string& name);
GridPreset parse_grid_preset(const std::string& name);
std::string to_string(GridPreset preset);

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options = {});
std::string to_json(const VerifyReport& report);

}  // namespace leelab
