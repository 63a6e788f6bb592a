// Runs every acceptance criterion and prints one line per criterion.
// Exit status is 0 when each criterion passes or fails only on entries the
// golden file annotates as known inconsistencies of the source data.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "dbs/verify.hpp"
#include "oracles.hpp"

int main(int argc, char** argv) {
  dbs::VerifyOptions opts;
  for (int a = 1; a < argc; ++a) {
    std::string arg = argv[a];
    if (arg == "--seed" && a + 1 < argc)
      opts.seed = std::strtoull(argv[++a], nullptr, 10);
    else if (arg == "--golden" && a + 1 < argc)
      opts.golden_path = argv[++a];
    else {
      std::cerr << "usage: dbs_acceptance [--seed N] [--golden PATH]\n";
      return 2;
    }
  }
  // Interval sizes come from the subword oracle, not from the library.
  opts.interval_count = [](const dbs::WeylElement& w) { return oracle::subword_interval_size(w); };

  int passed = 0, known = 0, failed = 0;
  for (int id = 1; id <= dbs::kCriterionCount; ++id) {
    auto r = dbs::run_criterion(id, opts);
    const char* tag = r.passed ? "PASS" : "FAIL";
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs/%.0fs", r.seconds, r.budget);
    std::cout << tag << "  [" << (id < 10 ? " " : "") << id << "] " << r.title << "  (" << timing
              << ")";
    if (!r.passed && r.known_issue) std::cout << "  known source inconsistency";
    std::cout << "\n      " << r.detail << "\n";
    std::cout.flush();
    if (r.passed)
      ++passed;
    else if (r.known_issue)
      ++known;
    else
      ++failed;
  }
  std::cout << passed << "/" << dbs::kCriterionCount << " criteria passed";
  if (known) std::cout << ", " << known << " failing on annotated source data";
  if (failed) std::cout << ", " << failed << " FAILED";
  std::cout << "\n";
  return failed ? 1 : 0;
}
