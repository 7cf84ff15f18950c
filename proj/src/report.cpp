#include "superkit/report.hpp"

#include <json.hpp>
#include <sstream>

namespace superkit {

int Report::passed() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == "pass") ++n;
  return n;
}

int Report::failed() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status != "pass") ++n;
  return n;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "suite " << r.suite << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL"
                                                                      : "ERR ")
        << "] " << c.id;
    if (!c.anchor.empty()) out << "  :: " << c.anchor;
    out << "  (" << c.ms << " ms)\n";
    if (c.status != "pass") {
      if (!c.expected.empty()) out << "         expected: " << c.expected << "\n";
      if (!c.actual.empty()) out << "         actual:   " << c.actual << "\n";
    }
  }
  out << "  " << r.passed() << " passed, " << r.failed() << " failed\n";
  return out.str();
}

std::string render_json(const Report& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["anchor"] = c.anchor;
    jc["status"] = c.status;
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    jc["ms"] = with_timings ? c.ms : 0.0;
    j["checks"].push_back(jc);
  }
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  return j.dump(2) + "\n";
}

}  // namespace superkit
