#include "doctest.h"
#include "dbs/rootdata.hpp"

using namespace dbs;

TEST_CASE("positive root counts") {
  const std::pair<const char*, std::size_t> cases[] = {
      {"A1", 1}, {"A3", 6}, {"B3", 9}, {"C3", 9}, {"D4", 12},
      {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (auto [label, count] : cases) {
    CAPTURE(label);
    CHECK(CartanData::from_type(label)->positive_roots().size() == count);
  }
}

TEST_CASE("Bourbaki orientation of the non-simply-laced types") {
  // cartan(i, j) = (alpha_j, coroot_i); the short root carries the -2 / -3 row.
  auto b2 = CartanData::from_type("B2");
  CHECK(b2->cartan(1, 2) == -1);
  CHECK(b2->cartan(2, 1) == -2);
  auto c3 = CartanData::from_type("C3");
  CHECK(c3->cartan(2, 3) == -2);
  auto g2 = CartanData::from_type("G2");
  CHECK(g2->cartan(1, 2) == -3);
  auto f4 = CartanData::from_type("F4");
  CHECK(f4->cartan(3, 2) == -2);
  CHECK(f4->cartan(2, 3) == -1);
}

TEST_CASE("weights pair with coroots coordinatewise") {
  auto a = CartanData::from_type("A3");
  Weight lam = fundamental_weight(*a, 2);
  CHECK(lam.pairing(2) == 1);
  CHECK(lam.pairing(1) == 0);
  Weight alpha2 = simple_root_as_weight(*a, 2);
  CHECK(alpha2.coords == std::vector<long>{-1, 2, -1});
  CHECK(reflect_weight(*a, 2, lam) == lam - alpha2);
}

TEST_CASE("reflections are involutions and preserve roots") {
  for (const char* label : {"B3", "G2", "F4", "D5"}) {
    auto d = CartanData::from_type(label);
    for (const auto& beta : d->positive_roots())
      for (int i = 1; i <= d->rank(); ++i) {
        RootVector img = reflect_root(*d, i, beta);
        CHECK(reflect_root(*d, i, img) == beta);
        bool is_root = false;
        for (const auto& g : d->positive_roots()) is_root = is_root || g == img || -g == img;
        CHECK(is_root);
      }
  }
}

TEST_CASE("r_alpha kills the coroot pairing and is not an involution") {
  auto d = CartanData::from_type("A2");
  Weight x({3, -1});
  Weight y = r_alpha(*d, 1, x);
  CHECK(y.pairing(1) == 0);
  CHECK(y.pairing(2) == -1);
  Weight lam = fundamental_weight(*d, 1);
  CHECK(r_alpha(*d, 1, lam) == Weight({0, 0}));
}

TEST_CASE("invalid Cartan data") {
  CHECK_THROWS_AS(CartanData::from_type("Q3"), InvalidInput);
  CHECK_THROWS_AS(CartanData::from_type("D3"), InvalidInput);
  CHECK_THROWS_AS(CartanData::from_type("G3"), InvalidInput);
  CHECK_THROWS_AS(CartanData::from_matrix({{2, -1}, {-1, 1}}), InvalidInput);
  CHECK_THROWS_AS(CartanData::from_matrix({{2, -2}, {-2, 2}}), InvalidInput);  // affine
  auto m = CartanData::from_matrix({{2, -1}, {-1, 2}});
  CHECK(m->positive_roots().size() == 3);
}
