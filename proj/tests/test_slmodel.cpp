#include "doctest.h"

#include "dbs/sampling.hpp"
#include "dbs/slmodel.hpp"

using namespace dbs;

namespace {

Scalars<Rational> sc;

SetupPtr a2_setup() { return make_setup(CartanData::from_type("A2"), {1, 2}, {1, 2}, {-1, 1, -1, 1}); }
SetupPtr a3_setup() {
  return make_setup(CartanData::from_type("A3"), {2, 3, 1, 3}, {3, 1, 2, 1},
                    {-1, -1, 1, 1, -1, 1, -1, 1});
}

QMatrix random_unit_upper(int m, Sampler& rng) {
  QMatrix u = q_identity(m);
  for (int r = 0; r < m; ++r)
    for (int c = r + 1; c < m; ++c) u(r, c) = rng.rational();
  return u;
}

}  // namespace

TEST_CASE("Chevalley generators in SL(3)") {
  auto x = x_root(3, 1, +1, Rational(5), sc);
  CHECK(x.mat(0, 1) == 5);
  CHECK(x.inv(0, 1) == -5);
  auto y = x_root(3, 2, -1, Rational(2), sc);
  CHECK(y.mat(2, 1) == 2);
  auto s = sbar(3, 2, sc);
  CHECK(s.mat(1, 2) == -1);
  CHECK(s.mat(2, 1) == 1);
  CHECK(s.mat * s.inv == q_identity(3));
  CHECK(det(s.mat) == 1);
  auto h = coroot(3, 1, Rational(3));
  CHECK(h.mat(0, 0) == 3);
  CHECK(h.mat(1, 1) == Rational(1, 3));
  CHECK_THROWS_AS(sl_size(*CartanData::from_type("B2")), InvalidInput);
}

TEST_CASE("representatives are permutation matrices up to sign") {
  auto d = CartanData::from_type("A3");
  for (const auto& w : all_elements(d)) {
    QElem g = wbar(w);
    auto perm = to_permutation(w);
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) CHECK((g.mat(r, c) != 0) == (r == perm[c] - 1));
    CHECK(g.mat * g.inv == q_identity(4));
  }
}

TEST_CASE("Gaussian decomposition") {
  Sampler rng(4);
  for (int rep = 0; rep < 20; ++rep) {
    QMatrix u = random_unit_upper(4, rng), l = random_unit_upper(4, rng).transpose();
    QMatrix h = q_identity(4);
    h(0, 0) = 2;
    h(1, 1) = -3;
    h(2, 2) = Rational(1, 5);
    h(3, 3) = 1 / (h(0, 0) * h(1, 1) * h(2, 2));
    QMatrix x = l * h * u;
    LDU f = gauss_ldu(x);
    CHECK(f.lower == l);
    CHECK(f.diag == h);
    CHECK(f.upper == u);
  }
  CHECK_THROWS_AS(gauss_ldu(sbar(3, 1, sc).mat), DecompositionUndefined);
}

TEST_CASE("Bruhat class of lower * wbar * upper") {
  Sampler rng(9);
  auto d = CartanData::from_type("A3");
  for (const auto& w : all_elements(d)) {
    QMatrix x = random_unit_upper(4, rng).transpose() * wbar(w).mat * random_unit_upper(4, rng);
    CHECK(bruhat_class(d, x) == w);
  }
}

TEST_CASE("A2 sections for the mask 0100") {
  auto g = Subexpression::from_string(a2_setup(), "0100");
  Rational z = 7;
  auto s1 = sbar(3, 1, sc);
  auto sec2 = section_pq(g, 2, z, sc);
  CHECK(sec2.p.mat == q_identity(3));
  CHECK(sec2.q.mat == (x_root(3, 1, -1, z, sc) * s1.inverse()).mat);
  auto sec4 = section_pq(g, 4, z, sc);
  CHECK(sec4.p.mat == (s1.inverse() * x_root(3, 2, +1, z, sc) * s1).mat);
  CHECK(sec4.q.mat == x_root(3, 2, +1, z, sc).mat);
}

TEST_CASE("alternating product and chart round trip") {
  Sampler rng(5);
  for (auto s : {a2_setup(), a3_setup()}) {
    enumerate(s, Filter::distinguished(), [&](const Subexpression& g) {
      auto J = j_set(g);
      std::vector<Rational> z(g.n());
      for (int j = 1; j <= g.n(); ++j)
        z[j - 1] = std::find(J.begin(), J.end(), j) != J.end() ? Rational(0) : rng.rational();
      CHECK(chain_product(g, z) == gamma_reps(g).back().mat);
      CHECK(chart_coordinates(g, point_tuple(g, z)) == z);
    });
  }
  auto g = Subexpression::from_string(a2_setup(), "0100");
  CHECK_THROWS_AS(chain_product(g, {Rational(0), Rational(1), Rational(0), Rational(0)}),
                  InvalidInput);
}

TEST_CASE("points outside the big chart do not factorise") {
  // Off I(gamma) a vanishing coordinate leaves the chart of the full mask.
  auto s = a2_setup();
  auto e = Subexpression::empty(s);
  std::vector<Rational> xi{Rational(0), Rational(1), Rational(2), Rational(3)};
  CHECK_THROWS_AS(factorize_to_z(e, xi), FactorizationFailed);
  xi[0] = 4;
  CHECK(factorize_to_z(e, xi).size() == 4);
}

TEST_CASE("torus characters") {
  QMatrix h = torus({Rational(2), Rational(3), Rational(1, 6)}).mat;
  CHECK(torus_character(h, Weight({1, 0})) == 2);
  CHECK(torus_character(h, Weight({0, 1})) == 6);
  CHECK(torus_character(h, Weight({2, -1})) == Rational(2, 3));
  CHECK_THROWS_AS(torus({Rational(2), Rational(3)}), InvalidInput);
}

TEST_CASE("sign search finds a sign vector") {
  Sampler rng(6);
  auto s = a2_setup();
  enumerate(s, Filter::distinguished(), [&](const Subexpression& g) {
    auto p = profile(g);
    std::vector<Rational> z(g.n());
    for (int j = 1; j <= g.n(); ++j) {
      bool inJ = std::find(p.J.begin(), p.J.end(), j) != p.J.end();
      bool inI = std::find(p.I.begin(), p.I.end(), j) != p.I.end();
      z[j - 1] = inJ ? Rational(0) : inI ? rng.rational() : rng.nonzero_rational();
    }
    CHECK(wy_sign_search(g, z).found);
  });
}
