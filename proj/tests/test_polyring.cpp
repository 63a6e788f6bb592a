#include "doctest.h"

#include <random>

#include "dbs/polyring.hpp"

using namespace dbs;

namespace {

MPoly P(const char* s, int n = 8) { return parse_poly(s, n); }

PolyMatrix random_poly_matrix(std::mt19937& rng, int k, int nvars) {
  PolyMatrix m(k, k, MPoly(nvars));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      MPoly e(nvars);
      for (int t = 0; t < 2; ++t) {
        Exponent ex(nvars, 0);
        ex[rng() % nvars] = static_cast<int>(rng() % 2);
        e.add_term(ex, Rational(static_cast<long>(rng() % 7) - 3));
      }
      m(r, c) = e;
    }
  return m;
}

}  // namespace

TEST_CASE("canonical printing") {
  CHECK(to_string(P("z1 - z2*z3 + z2*z5*z6 - z4*z5")) == "z2*z5*z6 - z4*z5 - z2*z3 + z1");
  CHECK(to_string(P("(z2*z6 - z4)*z7 - z6")) == "z2*z6*z7 - z4*z7 - z6");
  CHECK(to_string(P("3/2*z1^2 + 1")) == "3/2*z1^2 + 1");
  CHECK(to_string(P("z1 - z1")) == "0");
  CHECK(to_string(P("-(z1 + 2)")) == "-z1 - 2");
}

TEST_CASE("factored and expanded forms agree") {
  CHECK(P("(z4*z5 - z1)*z8 - (z4*z7 + z6)*z5 + z1*z7 + z3") ==
        P("z4*z5*z8 - z4*z5*z7 - z1*z8 + z1*z7 - z5*z6 + z3"));
  CHECK(P("(z1 + z2)^3") == P("z1^3 + 3*z1^2*z2 + 3*z1*z2^2 + z2^3"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("z9"), InvalidInput);
  CHECK_THROWS_AS(P("z0"), InvalidInput);
  CHECK_THROWS_AS(P("(z1"), InvalidInput);
  CHECK_THROWS_AS(P("z1 +"), InvalidInput);
  CHECK_THROWS_AS(P("z1^-1"), InvalidInput);
}

TEST_CASE("evaluation, substitution and linear splitting") {
  MPoly p = P("z2*z3 - z1", 3);
  CHECK(eval(p, {Rational(1), Rational(2), Rational(5)}) == 9);
  CHECK(subst_values(p, {{2, Rational(0)}}) == P("-z1", 3));
  auto [L, M] = split_linear(p, 3);
  CHECK(L == P("-z1", 3));
  CHECK(M == P("z2", 3));
  CHECK_THROWS(split_linear(P("z1^2", 3), 1));
  std::vector<std::optional<MPoly>> a(3);
  a[0] = P("z2 + z3", 3);
  CHECK(subst(p, a) == P("z2*z3 - z2 - z3", 3));
}

TEST_CASE("exact division") {
  MPoly a = P("z1^2 - z2^2", 2), b = P("z1 + z2", 2);
  CHECK(exact_div(a, b) == P("z1 - z2", 2));
  CHECK(exact_div(a * P("3*z1*z2 + 1", 2), a) == P("3*z1*z2 + 1", 2));
  CHECK_THROWS_AS(exact_div(P("z1 + 1", 2), P("z2", 2)), Error);
}

TEST_CASE("polynomial determinants agree across algorithms and with evaluation") {
  std::mt19937 rng(3);
  for (int k = 1; k <= 5; ++k)
    for (int rep = 0; rep < 3; ++rep) {
      PolyMatrix m = random_poly_matrix(rng, k, 3);
      MPoly a = det_cofactor(m), b = det_bareiss(m);
      CHECK(a == b);
      std::vector<Rational> pt{Rational(2), Rational(-1, 3), Rational(5, 2)};
      CHECK(eval(a, pt) == det(eval(m, pt)));
    }
}

TEST_CASE("rational determinant and rank") {
  QMatrix m(3, 3, Rational(0));
  int v = 1;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = v++;
  CHECK(det(m) == 0);
  CHECK(rank(m) == 2);
  m(2, 2) = 10;
  CHECK(det(m) == -3);
}
