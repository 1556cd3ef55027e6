// Runs the acceptance criteria and prints one line per criterion.
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "brouwer/acceptance/criteria.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria for the finite Brouwer-algebra engine"};
  std::vector<int> only;
  bool list = false;
  app.add_option("--only", only, "Run only these criteria (repeatable)")->check(CLI::Range(1, 11));
  app.add_flag("--list", list, "List the criteria and exit");
  CLI11_PARSE(app, argc, argv);

  namespace acc = brouwer::acceptance;
  if (list) {
    for (const auto& c : acc::criteria()) std::printf("%2d  %s (limit %.0f s)\n", c.id, c.title.c_str(), c.limit_seconds);
    return 0;
  }
  bool all = true;
  for (const auto& r : acc::run_criteria(only)) {
    std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s): %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
