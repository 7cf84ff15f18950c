#pragma once

#include <string>
#include <vector>

namespace superkit {

struct CheckResult {
  std::string id;
  std::string anchor;    // what identity the check asserts
  std::string status;    // "pass" | "fail" | "error"
  std::string expected;
  std::string actual;
  double ms = 0.0;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

std::string render_text(const Report& r);

/// Deterministic JSON: {suite, checks:[{id, anchor, status, expected,
/// actual, ms}], passed, failed}. Timings are zeroed unless requested so that
/// identical inputs render byte-identical output.
std::string render_json(const Report& r, bool with_timings = false);

}  // namespace superkit
