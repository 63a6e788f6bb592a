#include "doctest.h"

#include <random>

#include "dbs/weylgroup.hpp"
#include "oracles.hpp"

using namespace dbs;

namespace {

std::vector<int> random_word(std::mt19937& rng, int rank, int len) {
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(1 + static_cast<int>(rng() % rank));
  return w;
}

}  // namespace

TEST_CASE("group orders") {
  const std::pair<const char*, std::size_t> cases[] = {
      {"A1", 2}, {"A3", 24}, {"B3", 48}, {"C3", 48}, {"G2", 12}, {"D4", 192}, {"F4", 1152}};
  for (auto [label, order] : cases) {
    CAPTURE(label);
    CHECK(all_elements(CartanData::from_type(label)).size() == order);
  }
}

TEST_CASE("type A agrees with permutations") {
  auto d = CartanData::from_type("A3");
  auto elems = all_elements(d);
  for (const auto& w : elems) {
    auto p = to_permutation(w);
    CHECK(from_permutation(d, p) == w);
    CHECK(length(w) == oracle::inversions(p));
    CHECK(oracle::from_word(4, reduced_word(w)) == p);
    for (int i = 1; i <= 3; ++i) {
      auto sw = oracle::compose(oracle::transposition(4, i), p);
      auto ws = oracle::compose(p, oracle::transposition(4, i));
      CHECK(w.is_left_descent(i) == (oracle::inversions(sw) < oracle::inversions(p)));
      CHECK(w.is_right_descent(i) == (oracle::inversions(ws) < oracle::inversions(p)));
    }
  }
  for (const auto& v : elems)
    for (const auto& w : elems)
      CHECK(bruhat_leq(v, w) == oracle::bruhat_leq(to_permutation(v), to_permutation(w)));
}

TEST_CASE("reduced words are reduced and canonical") {
  for (const char* label : {"B3", "G2", "A4"}) {
    auto d = CartanData::from_type(label);
    for (const auto& w : all_elements(d)) {
      auto word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == length(w));
      CHECK(WeylElement::from_word(d, word) == w);
      if (!word.empty()) CHECK(w.is_left_descent(word.front()));
    }
  }
}

TEST_CASE("Bruhat intervals match the subword oracle") {
  for (const char* label : {"B3", "G2", "A3"}) {
    auto d = CartanData::from_type(label);
    for (const auto& w : all_elements(d)) {
      auto interval = bruhat_interval_below(w);
      CHECK(interval.size() == oracle::subword_interval_size(w));
      for (const auto& v : interval) CHECK(bruhat_leq(v, w));
    }
  }
}

TEST_CASE("Demazure product and the two min actions match the permutation model") {
  std::mt19937 rng(11);
  auto d = CartanData::from_type("A4");
  for (int rep = 0; rep < 200; ++rep) {
    auto word = random_word(rng, 4, 1 + static_cast<int>(rng() % 8));
    auto other = random_word(rng, 4, static_cast<int>(rng() % 8));
    CHECK(to_permutation(demazure_of_word(d, word)) == oracle::demazure(5, word));
    auto w = WeylElement::from_word(d, other);
    CHECK(to_permutation(tri_left_word(word, w)) == oracle::tri_left(word, to_permutation(w)));
    CHECK(to_permutation(tri_right_word(w, word)) == oracle::tri_right(to_permutation(w), word));
  }
}

TEST_CASE("monoid actions depend only on the Demazure product of the word") {
  // s1 s2 s1 and s2 s1 s2 are both reduced words of w0 in A2; s1 s1 has product s1.
  auto d = CartanData::from_type("A2");
  for (const auto& w : all_elements(d)) {
    CHECK(tri_left_word({1, 2, 1}, w) == tri_left_word({2, 1, 2}, w));
    CHECK(tri_right_word(w, {1, 2, 1}) == tri_right_word(w, {2, 1, 2}));
    CHECK(tri_left_word({1, 1}, w) == tri_left(simple(d, 1), w));
    CHECK(demazure_star_word({1, 1}, w) == demazure_star(simple(d, 1), w));
  }
}

TEST_CASE("longest element and limits") {
  auto d = CartanData::from_type("A3");
  auto w0 = demazure_of_word(d, {1, 2, 1, 3, 2, 1, 3, 2, 1});
  CHECK(length(w0) == 6);
  CHECK(bruhat_interval_below(w0).size() == 24);
  CHECK_THROWS_AS(bruhat_interval_below(w0, 10), LimitExceeded);
  CHECK_THROWS_AS(to_permutation(WeylElement::identity(CartanData::from_type("B2"))), InvalidInput);
  CHECK_THROWS_AS(simple(d, 4), InvalidInput);
}
