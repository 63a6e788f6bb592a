#include "doctest.h"

#include "dbs/minorfns.hpp"
#include "dbs/sampling.hpp"

using namespace dbs;

namespace {

Scalars<Rational> sc;

SetupPtr a3_setup() {
  return make_setup(CartanData::from_type("A3"), {2, 3, 1, 3}, {3, 1, 2, 1},
                    {-1, -1, 1, 1, -1, 1, -1, 1});
}

QMatrix random_sl(int m, Sampler& rng) {
  QElem g = identity_elem(m, sc);
  for (int k = 0; k < 10; ++k) {
    int i = static_cast<int>(rng.integer(1, m - 1));
    g = g * x_root(m, i, rng.integer(0, 1) ? 1 : -1, rng.rational(), sc);
    if (rng.integer(0, 3) == 0) g = g * sbar(m, i, sc);
  }
  return g.mat;
}

}  // namespace

TEST_CASE("generalised minors are submatrix determinants") {
  Sampler rng(12);
  auto d = CartanData::from_type("A3");
  auto elems = all_elements(d);
  for (int rep = 0; rep < 30; ++rep) {
    QMatrix x = random_sl(4, rng);
    const auto& u = elems[rng.integer(0, 23)];
    const auto& v = elems[rng.integer(0, 23)];
    for (int i = 1; i <= 3; ++i) CHECK(gen_minor(u, v, i, x) == submatrix_minor(u, v, i, x));
  }
  CHECK_THROWS_AS(delta_lambda(4, q_identity(3)), InvalidInput);
}

TEST_CASE("psi families of the A3 shuffle") {
  auto s = a3_setup();
  auto f = psi_family(Subexpression::from_string(s, "10100010"));
  CHECK(to_string(f.psi[5]) == "z2*z5*z6 - z4*z5 - z2*z3 + z1");
  CHECK(f.psi[6] == parse_poly("(z2*z6 - z4)*z7 - z6", 8));
  auto h = psi_family(Subexpression::from_string(s, "01111000"));
  CHECK(h.psi[5] == parse_poly("z1*z6 - z4*z3", 8));
  CHECK(h.psi[7] == f.psi[7]);
  // psi_j = L_j + z_j M_j with L_j, M_j free of z_j .. z_n
  for (int j = 1; j <= 8; ++j) {
    auto [L, M] = psi_split(f, j);
    CHECK(L + MPoly::variable(8, j) * M == f.psi[j - 1]);
    for (int k = j; k <= 8; ++k) {
      CHECK(L.degree_in(k) <= 0);
      CHECK(M.degree_in(k) <= 0);
    }
  }
  int rejected = 0;
  enumerate(s, Filter::all(), [&](const Subexpression& g) {
    if (is_distinguished(g)) return;
    ++rejected;
    CHECK_THROWS_AS(psi_family(g), InvalidInput);
  });
  CHECK(rejected > 0);
}

TEST_CASE("cell membership through psi agrees with Phi_n") {
  Sampler rng(13);
  auto s = a3_setup();
  auto dist = enumerate_all(s, Filter::distinguished());
  std::vector<PsiFamily> fams;
  for (const auto& g : dist) fams.push_back(psi_family(g));
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<Rational> z(8);
    for (auto& x : z) x = rng.integer(0, 2) ? rng.rational() : Rational(0);
    int hits = 0;
    for (std::size_t a = 0; a < dist.size(); ++a) {
      bool in_phi = cell_test_phi(dist[a], z), in_psi = cell_test_psi(fams[a], z);
      CHECK(in_phi == in_psi);
      hits += in_phi;
    }
    CHECK(hits <= 1);
  }
}

TEST_CASE("cell coordinates round trip") {
  Sampler rng(14);
  auto s = a3_setup();
  for (const auto& g : enumerate_all(s, Filter::distinguished())) {
    auto f = psi_family(g);
    std::vector<Rational> vals(f.K.size());
    for (auto& v : vals) v = rng.rational();
    for (int j = 1; j <= 8; ++j)
      if (std::find(f.I.begin(), f.I.end(), j) == f.I.end()) vals.push_back(rng.nonzero_rational());
    std::vector<Rational> z;
    try {
      z = psi_solve(f, vals);
    } catch (const FactorizationFailed&) {
      continue;
    }
    CHECK(cell_test_psi(f, z));
    CHECK(psi_coords(f, z) == vals);
  }
}
