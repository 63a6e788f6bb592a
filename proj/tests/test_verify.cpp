#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dbs/verify.hpp"

using namespace dbs;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden file loads") {
  auto gf = load_golden(default_golden_path());
  CHECK(gf.psi.size() == 2);
  CHECK(gf.setup("a3_shuffle")->n() == 8);
  CHECK_THROWS_AS(gf.setup("missing"), InvalidInput);
  CHECK_THROWS_AS(load_golden("/nonexistent/golden.json"), InvalidInput);
}

TEST_CASE("suites") {
  CHECK(suite_criteria("examples").size() == 5);
  CHECK(suite_criteria("all").size() == kCriterionCount);
  CHECK_THROWS_AS(suite_criteria("bogus"), InvalidInput);
}

TEST_CASE("a corrupted golden string is reported") {
  std::string text = read_file(default_golden_path());
  auto pos = text.find("\"z2*z5*z6 - z4*z5 - z2*z3 + z1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 31, "\"z2*z5*z6 - z4*z5 - z2*z3 - z1\"");
  std::string path = "corrupted_golden.json";
  std::ofstream(path) << text;
  VerifyOptions o;
  o.golden_path = path;
  auto r = run_criterion(1, o);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.acceptable());
  CHECK(r.detail.find("psi_6") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("sign substitutions are named in the failure detail") {
  std::string text = read_file(default_golden_path());
  auto pos = text.find("\"z2*z3 - z1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "\"z2*z3 + z1\"");
  std::string path = "signed_golden.json";
  std::ofstream(path) << text;
  VerifyOptions o;
  o.golden_path = path;
  auto r = run_criterion(1, o);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("negating") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("random setups are deterministic and respect the options") {
  RandomSetupOptions ro;
  ro.count = 5;
  ro.empty_v = true;
  auto a = random_setups(7, ro), b = random_setups(7, ro);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i]->sigma_word() == b[i]->sigma_word());
    CHECK(a[i]->v_word().empty());
    CHECK(a[i]->data()->rank() <= 3);
  }
  ro.reduced = true;
  ro.empty_v = false;
  for (const auto& s : random_setups(8, ro)) {
    CHECK(is_reduced_word(s->data(), s->u_word()));
    CHECK(is_reduced_word(s->data(), s->v_word()));
  }
}
