// superkit command line: run built-in verification suites or user model
// files and emit text/JSON reports. Talks to the engine exclusively through
// the C API in superkit/superkit.h.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "superkit/superkit.h"

namespace {

std::string render(const sk_report* report, const std::string& format,
                   bool timings) {
  size_t needed = 0;
  sk_report_render(report, format.c_str(), timings ? 1 : 0, nullptr, 0,
                   &needed);
  std::string buf(needed, '\0');
  if (sk_report_render(report, format.c_str(), timings ? 1 : 0, buf.data(),
                       buf.size(), &needed) != SK_OK) {
    std::cerr << "superkit: " << sk_last_error() << "\n";
    std::exit(1);
  }
  buf.resize(needed - 1);
  return buf;
}

std::vector<std::string> suite_list() {
  size_t needed = 0;
  sk_suite_list(nullptr, 0, &needed);
  std::string buf(needed, '\0');
  sk_suite_list(buf.data(), buf.size(), &needed);
  std::vector<std::string> names;
  std::string cur;
  for (char c : buf) {
    if (c == '\n') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (c != '\0') {
      cur += c;
    }
  }
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superkit: exact verification suites for supergeometry models"};

  std::string suite, model, format = "text";
  std::uint64_t seed = 12345;
  bool list = false, timings = false, perturb = false;

  if (const char* env = std::getenv("SUPERKIT_SEED"))
    seed = std::strtoull(env, nullptr, 10);

  auto* opt_suite =
      app.add_option("--suite", suite, "run a built-in suite (see --list)");
  auto* opt_model =
      app.add_option("--model", model, "run the checks of a model file");
  app.add_option("--format", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed,
                 "seed for randomized property checks "
                 "(env SUPERKIT_SEED as fallback)");
  app.add_flag("--list", list, "list suites (with --suite: list its checks)");
  app.add_flag("--timings", timings, "include wall times in JSON output");
  app.add_flag("--perturb", perturb,
               "assert the perturbed negative-control fixtures directly; "
               "the run must then fail");
  opt_suite->excludes(opt_model);

  CLI11_PARSE(app, argc, argv);

  if (list && suite.empty()) {
    for (const auto& name : suite_list()) std::cout << name << "\n";
    return 0;
  }

  if (suite.empty() && model.empty()) {
    std::cerr << app.help();
    return 1;
  }

  sk_report* report = nullptr;
  sk_status st = !model.empty()
                     ? sk_model_run_file(model.c_str(), seed, &report)
                     : sk_suite_run(suite.c_str(), seed, perturb ? 1 : 0,
                                    &report);
  if (st != SK_OK) {
    std::cerr << "superkit: " << sk_last_error() << "\n";
    return 1;
  }

  if (list) {
    std::string text = render(report, "json", false);
    // enumerate check ids only
    std::size_t pos = 0;
    while ((pos = text.find("\"id\": \"", pos)) != std::string::npos) {
      pos += 7;
      std::size_t end = text.find('"', pos);
      std::cout << text.substr(pos, end - pos) << "\n";
      pos = end;
    }
    sk_report_free(report);
    return 0;
  }

  std::cout << render(report, format, timings);
  int passed = 0, failed = 0;
  sk_report_counts(report, &passed, &failed);
  sk_report_free(report);
  return failed == 0 ? 0 : 1;
}
