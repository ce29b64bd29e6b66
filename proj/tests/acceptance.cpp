// Acceptance gate: one line per criterion, wall-clock budgets enforced.
// Every criterion drives the same verification suites that ship in the
// library, with the default deterministic seed.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "verify.hpp"

namespace {

struct Criterion {
  const char* suite;
  const char* label;
  double budget_seconds; // 0 = no budget
};

constexpr Criterion kCriteria[] = {
    {"pairing", "intersection pairing table", 1.0},
    {"deg1", "degree-one classes", 5.0},
    {"kva", "k-very-ampleness test", 1.0},
    {"lemma-4-7", "socle pairs force the full tail", 120.0},
    {"pencils", "pencil members embed as lines", 300.0},
    {"decompose", "moving-point decomposition", 0.0},
    {"binform-class", "binary-form pencil class", 60.0},
    {"lemma-5-3", "sections factor through the line", 0.0},
    {"phi1-fibers", "fiber dichotomy", 0.0},
    {"dimensions", "dimension formulas", 0.0},
    {"partitions", "partition enumeration", 10.0},
};

} // namespace

int main() {
  int failures = 0;
  int index = 0;
  for (const Criterion& criterion : kCriteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      hilb::SuiteReport report =
          hilb::run_suite(criterion.suite, hilb::VerifyOptions{});
      pass = report.pass;
      if (!pass)
        for (const auto& item : report.items)
          if (!item.pass) {
            detail = item.name + ": " + item.detail;
            break;
          }
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      pass = false;
      detail = "budget exceeded";
    }
    if (criterion.budget_seconds > 0)
      std::printf("[%s] %2d %-38s %7.2fs (budget %.0fs)\n",
                  pass ? "PASS" : "FAIL", index, criterion.label, seconds,
                  criterion.budget_seconds);
    else
      std::printf("[%s] %2d %-38s %7.2fs\n", pass ? "PASS" : "FAIL", index,
                  criterion.label, seconds);
    if (!pass) {
      if (!detail.empty()) std::printf("        %s\n", detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
