#pragma once

// Golden-file and property checks shared by the CLI and the acceptance runner.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dbs/monomial.hpp"

namespace dbs {

struct SetupSpec {
  std::string cartan_type;                       // e.g. "A3"; ignored when a matrix is given
  std::vector<std::vector<int>> cartan_matrix;   // optional explicit matrix
  std::vector<int> u, v, eps;
};

SetupPtr build_setup(const SetupSpec& spec);

struct GoldenFile {
  struct JSet {
    std::string setup, mask;
    std::vector<int> J;
  };
  struct Positivity {
    std::string setup, mask;
    bool positive = false;
  };
  // Each factor token: "e", "s<i>", "s<i>^-1", "x+<i>", "x-<i>", optional ":neg" on x.
  struct Sections {
    std::string setup, mask;
    std::vector<std::vector<std::string>> p, q;
  };
  struct Psi {
    std::string setup, mask;
    std::vector<std::string> psi;
  };
  struct Cell {
    std::string setup, mask;
    std::vector<std::string> vanish, nonvanish;
    std::string known_issue;  // nonempty: the listed conditions are expected to disagree
  };

  std::map<std::string, SetupSpec> setups;
  std::vector<JSet> j_sets;
  std::vector<Positivity> positivity;
  std::vector<Sections> sections;
  std::vector<Psi> psi;
  std::vector<Cell> cells;

  SetupPtr setup(const std::string& name) const;
};

/// Throws InvalidInput on a missing file or malformed content.
GoldenFile load_golden(const std::string& path);
std::string default_golden_path();

/// Number of elements in the Bruhat interval [e, w].
using IntervalCounter = std::function<std::size_t(const WeylElement&)>;

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  std::string golden_path = default_golden_path();
  IntervalCounter interval_count;  // empty: bruhat_interval_below
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool known_issue = false;  // failure confined to entries annotated in the golden file
  std::string detail;
  double seconds = 0;
  double budget = 0;

  bool acceptable() const { return passed || known_issue; }
};

constexpr int kCriterionCount = 14;

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const VerifyOptions& opts);

/// "examples" (1-5), "properties" (6-14) or "all".
std::vector<int> suite_criteria(std::string_view suite);
std::vector<CriterionResult> run_suite(std::string_view suite, const VerifyOptions& opts);

struct RandomSetupOptions {
  int count = 20;
  int max_rank = 3;
  int max_n = 8;
  bool type_a_only = false;
  bool empty_v = false;
  bool reduced = false;  // u and v reduced words
};

/// Deterministic random small setups.
std::vector<SetupPtr> random_setups(std::uint64_t seed, const RandomSetupOptions& opts);

}  // namespace dbs
