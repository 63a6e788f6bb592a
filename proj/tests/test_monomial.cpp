#include "doctest.h"

#include "dbs/monomial.hpp"

using namespace dbs;

namespace {

MonomialMatrix mm(std::vector<std::vector<long>> e) {
  MonomialMatrix m;
  for (std::size_t i = 0; i < e.size(); ++i) m.indices.push_back(static_cast<int>(i) + 1);
  m.entries = std::move(e);
  return m;
}

SetupPtr a3_setup() {
  return make_setup(CartanData::from_type("A3"), {2, 3, 1, 3}, {3, 1, 2, 1},
                    {-1, -1, 1, 1, -1, 1, -1, 1});
}

}  // namespace

TEST_CASE("interval words") {
  auto s = a3_setup();
  auto d = s->data();
  auto [u, v] = interval_words(*s, 1, 8);
  CHECK(u == WeylElement::from_word(d, {3, 1, 3}));
  CHECK(v == WeylElement::from_word(d, {3, 1, 2, 1}));
  auto [u2, v2] = interval_words(*s, 1, 2);
  CHECK(u2 == simple(d, 3));
  CHECK(v2.is_identity());
  CHECK_THROWS_AS(interval_words(*s, 3, 3), InvalidInput);
}

TEST_CASE("triangular inverses") {
  CHECK(is_identity(l_matrix(mm({{1, 0}, {0, 1}}))));
  CHECK(l_matrix(mm({{1, 0}, {5, 1}})).entries[1][0] == -5);
  const long a = 2, b = -3, c = 7;
  auto l = l_matrix(mm({{1, 0, 0}, {a, 1, 0}, {b, c, 1}}));
  CHECK(l.entries[2][0] == a * c - b);
  CHECK(l.entries[2][1] == -c);
  CHECK_THROWS_AS(l_matrix(mm({{1, 1}, {0, 1}})), InvalidInput);
  CHECK_THROWS_AS(l_matrix(mm({{2, 0}, {0, 1}})), InvalidInput);
}

TEST_CASE("exponent matrices of the A3 shuffle") {
  auto s = a3_setup();
  for (const auto& g : enumerate_all(s, Filter::positive())) {
    auto m = monomial_matrix(g);
    CHECK(m.indices.size() == static_cast<std::size_t>(profile(g).dim));
    for (int a = 0; a < m.size(); ++a) CHECK(m.entries[a][a] == 1);
    CHECK(is_identity(multiply(m, l_matrix(m))));
  }
  auto g = Subexpression::from_string(s, "10100010");
  CHECK_THROWS_AS(m_exponent(g, 3, 1), InvalidInput);
  CHECK_THROWS_AS(monomial_matrix(Subexpression::from_string(s, "01111000")), InvalidInput);
}

TEST_CASE("monomial identity at factorised points") {
  auto s = a3_setup();
  auto rep = verify_monomial(Subexpression::from_string(s, "10100010"), 10, 99);
  CHECK(rep.passed());
  CHECK(rep.samples.size() == 10);
  auto one = make_setup(CartanData::from_type("A1"), {1}, {}, {-1});
  auto r1 = verify_monomial(Subexpression::empty(one), 5, 1);
  CHECK(r1.passed());
  // psi_1 = z_1 = xi_1^{-1}
  for (const auto& smp : r1.samples) CHECK(smp.z[0] * smp.xi[0] == 1);
}

TEST_CASE("closed inverse for a single word") {
  auto s = make_setup(CartanData::from_type("A1"), {1, 1}, {}, {-1, -1});
  auto g = Subexpression::empty(s);
  auto l = l_matrix(monomial_matrix(g));
  CHECK(inverse_closed_form(g, 2, 1) == l.entries[1][0]);
  CHECK(inverse_closed_form(g, 2, 1) == 1);
  for (const char* t : {"A3", "B3", "G2"}) {
    auto d = CartanData::from_type(t);
    auto t2 = make_setup(d, {1, 2, 1, 2, 1}, {}, {-1, -1, -1, -1, -1});
    for (const auto& h : enumerate_all(t2, Filter::positive())) CHECK(closed_form_compare(h).empty());
  }
  auto dbl = a3_setup();
  CHECK_THROWS_AS(inverse_closed_form(Subexpression::from_string(dbl, "10100010"), 2, 1), InvalidInput);
}
