#include "doctest.h"

#include "dbs/shuffles.hpp"
#include "oracles.hpp"

using namespace dbs;

namespace {

SetupPtr a2_setup() { return make_setup(CartanData::from_type("A2"), {1, 2}, {1, 2}, {-1, 1, -1, 1}); }

}  // namespace

TEST_CASE("setup validation") {
  auto d = CartanData::from_type("A2");
  CHECK_THROWS_AS(make_setup(d, {1, 2}, {1}, {-1, 1}), InvalidInput);
  CHECK_THROWS_AS(make_setup(d, {1}, {1}, {-1, -1}), InvalidInput);
  CHECK_THROWS_AS(make_setup(d, {3}, {}, {-1}), InvalidInput);
  CHECK_THROWS_AS(make_setup(d, {1}, {}, {0}), InvalidInput);
}

TEST_CASE("interleaved word") {
  auto s = make_setup(CartanData::from_type("A5"), {1, 2, 3}, {4, 5}, {-1, 1, 1, -1, -1});
  CHECK(s->sigma_word() == std::vector<int>{1, 4, 5, 2, 3});
  auto t = make_setup(CartanData::from_type("A4"), {3, 2, 3, 2, 3}, {4, 2, 1, 4},
                      {-1, -1, 1, -1, 1, 1, -1, -1, 1});
  CHECK(t->sigma_word() == std::vector<int>{3, 2, 4, 3, 2, 1, 2, 3, 4});
}

TEST_CASE("J sets and classes in the A2 shuffle") {
  auto s = a2_setup();
  auto g = Subexpression::from_string(s, "0100");
  auto h = Subexpression::from_string(s, "0011");
  CHECK(j_set(g) == std::vector<int>{2});
  CHECK(j_set(h) == std::vector<int>{3});
  CHECK(is_positive(g));
  CHECK(is_distinguished(h));
  CHECK_FALSE(is_positive(h));
  auto p = profile(h);
  CHECK(p.I == std::vector<int>{3, 4});
  CHECK(p.K == std::vector<int>{4});
  CHECK(p.dim == 3);
}

TEST_CASE("positivity in the A4 shuffle") {
  auto s = make_setup(CartanData::from_type("A4"), {3, 2, 3, 2, 3}, {4, 2, 1, 4},
                      {-1, -1, 1, -1, 1, 1, -1, -1, 1});
  CHECK(is_positive(Subexpression::from_string(s, "000100111")));
  CHECK_FALSE(is_positive(Subexpression::from_string(s, "001111110")));
}

TEST_CASE("mask encodings") {
  auto s = a2_setup();
  auto g = Subexpression::from_string(s, "0110");
  CHECK(g.bits() == 0b0110);
  CHECK(Subexpression::from_bits(s, 0b0110) == g);
  CHECK(g.to_string() == "0110");
  CHECK_THROWS_AS(Subexpression::from_string(s, "011"), InvalidInput);
  CHECK_THROWS_AS(Subexpression::from_string(s, "01x0"), InvalidInput);
}

TEST_CASE("powers follow the side rule and round trip") {
  auto s = a2_setup();
  enumerate(s, Filter::all(), [&](const Subexpression& g) {
    auto pw = gamma_powers(g);
    WeylElement acc = WeylElement::identity(s->data());
    for (int j = 1; j <= g.n(); ++j) {
      acc = s->eps(j) == -1 ? mul(acc, g.factor(j)) : mul(g.factor(j), acc);
      CHECK(pw[j - 1] == acc);
    }
    CHECK(from_powers(s, pw) == g);
    auto sp = sided_powers(g);
    CHECK(pw.back() == mul(inv(sp.v.back()), sp.u.back()));
  });
}

TEST_CASE("distinguished means J inside I") {
  auto s = make_setup(CartanData::from_type("A3"), {2, 3, 1, 3}, {3, 1, 2, 1},
                      {-1, -1, 1, 1, -1, 1, -1, 1});
  int count = 0;
  enumerate(s, Filter::all(), [&](const Subexpression& g) {
    ++count;
    auto p = profile(g);
    bool sub = std::includes(p.I.begin(), p.I.end(), p.J.begin(), p.J.end());
    CHECK(p.is_distinguished == sub);
    if (p.is_positive) CHECK(p.J == p.I);
  });
  CHECK(count == 256);
}

TEST_CASE("one positive subexpression per element below the bound") {
  auto s = make_setup(CartanData::from_type("B3"), {1, 2, 3, 2}, {3, 2, 1},
                      {-1, 1, -1, 1, -1, 1, -1});
  auto bound = s->bound();
  auto positives = enumerate_all(s, Filter::positive());
  CHECK(positives.size() == oracle::subword_interval_size(bound));
  for (const auto& w : bruhat_interval_below(bound)) {
    auto g = positive_from_w(s, w);
    CHECK(is_positive(g));
    CHECK(gamma_powers(g).back() == w);
    CHECK(enumerate_all(s, Filter::fixed_w(w)).size() >= 1);
  }
  CHECK_THROWS_AS(positive_from_w(s, demazure_of_word(s->data(), {1, 2, 3, 1, 2, 3, 1, 2, 3})),
                  InvalidInput);
}

TEST_CASE("empty words and bounds") {
  auto s = make_setup(CartanData::from_type("A2"), {}, {}, {});
  CHECK(enumerate_all(s, Filter::all()).size() == 1);
  auto big = make_setup(CartanData::from_type("A1"), std::vector<int>(21, 1), {},
                        std::vector<int>(21, -1));
  CHECK_THROWS_AS(enumerate_all(big, Filter::all()), LimitExceeded);
}

TEST_CASE("double-subexpression dictionary") {
  auto s = a2_setup();
  enumerate(s, Filter::distinguished(), [&](const Subexpression& g) {
    auto w = wy_convert(g);
    auto p = profile(g);
    CHECK(w.Jplus == p.J);
    CHECK(w.double_distinguished);
    CHECK(w.positive == p.is_positive);
  });
  auto bad = make_setup(CartanData::from_type("A2"), {1, 1}, {}, {-1, -1});
  CHECK_THROWS_AS(wy_convert(Subexpression::empty(bad)), InvalidInput);
  CHECK_FALSE(is_reduced_word(bad->data(), {1, 1}));
  CHECK(is_reduced_word(bad->data(), {1, 2, 1}));
}
