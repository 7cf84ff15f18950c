#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superkit/report.hpp"

namespace superkit {

struct SuiteOptions {
  std::uint64_t seed = 12345;
  /// Turn the negative-control fixtures into direct assertions of the
  /// perturbed claims; they then fail, proving the checks are not vacuous.
  bool perturb = false;
};

/// Built-in suite names, ending with "all".
std::vector<std::string> suite_names();

Report run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Parse a model file and run its embedded checks.
Report run_model_file(const std::string& path, const SuiteOptions& opts = {});
Report run_model_text(const std::string& text, const std::string& name,
                      const SuiteOptions& opts = {});

}  // namespace superkit
