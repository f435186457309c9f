#pragma once

#include <functional>
#include <string>
#include <vector>

namespace f2coh {

struct VerifyContext {
  std::string golden_dir;
};

struct Check {
  std::string id;
  std::string section;
  std::string description;
  // Throws on failure; the message becomes the check detail.
  std::function<void(const VerifyContext&)> run;
};

struct CheckResult {
  std::string id;
  std::string section;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

const std::vector<Check>& all_checks();
std::vector<std::string> verify_sections();
std::string default_golden_dir();

// Empty section runs everything; unknown section is a ParameterError.
std::vector<CheckResult> run_checks(const std::string& section, const VerifyContext& ctx);
CheckResult run_check(const std::string& id, const VerifyContext& ctx);

}  // namespace f2coh
