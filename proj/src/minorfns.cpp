#include "dbs/minorfns.hpp"

#include <algorithm>

namespace dbs {

namespace {

bool contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

void check_minor_index(int i, int m) {
  if (i < 1 || i > m) throw InvalidInput("minor order out of range");
}

}  // namespace

Rational delta_lambda(int i, const QMatrix& x) {
  check_minor_index(i, x.rows());
  return det(x.leading(i, i));
}

MPoly delta_lambda(int i, const PolyMatrix& x) {
  check_minor_index(i, x.rows());
  return det(x.leading(i, i));
}

Rational gen_minor(const WeylElement& u, const WeylElement& v, int i, const QMatrix& x) {
  return delta_lambda(i, wbar(u).inv * x * wbar(v).mat);
}

Rational submatrix_minor(const WeylElement& u, const WeylElement& v, int i, const QMatrix& x) {
  auto pu = to_permutation(u), pv = to_permutation(v);
  check_minor_index(i, static_cast<int>(pu.size()));
  std::vector<int> rows(pu.begin(), pu.begin() + i), cols(pv.begin(), pv.begin() + i);
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (auto& r : rows) --r;
  for (auto& c : cols) --c;
  return det(x.submatrix(rows, cols));
}

namespace {

// Running products over the full-chart sections.
struct FullChart {
  std::vector<Section<MPoly>> sec;
  std::vector<PElem> P, Q;  // P[j] = p_1..p_j, P[0] = e

  explicit FullChart(SetupPtr setup) {
    Subexpression full = Subexpression::full(setup);
    sec = symbolic_sections(full);
    const int n = setup->n();
    const int m = sl_size(*setup->data());
    Scalars<MPoly> sc(n);
    P.push_back(identity_elem(m, sc));
    Q.push_back(identity_elem(m, sc));
    for (int j = 1; j <= n; ++j) {
      P.push_back(P.back() * sec[j - 1].p);
      Q.push_back(Q.back() * sec[j - 1].q);
    }
  }

  PolyMatrix g(const ShuffleSetup& s, int j) const {
    if (s.eps(j) == -1) return Q[j - 1].inv * P[j].mat;
    return Q[j].inv * P[j - 1].mat;
  }
};

}  // namespace

PolyMatrix g_matrix(SetupPtr setup, int j) {
  if (j < 1 || j > setup->n()) throw InvalidInput("g_j index out of range");
  FullChart fc(setup);
  return fc.g(*setup, j);
}

PsiFamily psi_family(const Subexpression& g) {
  const auto& s = g.setup();
  CellProfile prof = profile(g);
  if (!prof.is_distinguished)
    throw InvalidInput("psi is defined only for distinguished subexpressions (mask " +
                       g.to_string() + ")");
  const int n = g.n();
  PsiFamily f;
  f.setup = g.setup_ptr();
  f.mask = g.mask();
  f.J = prof.J;
  f.I = prof.I;
  f.K = prof.K;
  if (n == 0) return f;
  FullChart fc(g.setup_ptr());
  Scalars<MPoly> sc(n);
  WeylElement prev = WeylElement::identity(s.data());
  for (int j = 1; j <= n; ++j) {
    PElem w = lift_elem(wbar(prev), sc);
    PolyMatrix gj = fc.g(s, j);
    PolyMatrix arg = s.eps(j) == -1 ? w.inv * gj : gj * w.inv;
    MPoly pj = delta_lambda(s.delta(j), arg);
    f.splits.push_back(split_linear(pj, j));
    f.psi.push_back(std::move(pj));
    prev = prof.gammas[j - 1];
  }
  return f;
}

MPoly psi(const Subexpression& g, int j) {
  if (j < 1 || j > g.n()) throw InvalidInput("psi index out of range");
  return psi_family(g).psi[j - 1];
}

std::pair<MPoly, MPoly> psi_split(const PsiFamily& f, int j) {
  if (j < 1 || j > static_cast<int>(f.psi.size())) throw InvalidInput("psi index out of range");
  return f.splits[j - 1];
}

bool cell_test_psi(const PsiFamily& f, const std::vector<Rational>& point) {
  const int n = static_cast<int>(f.psi.size());
  for (int j = 1; j <= n; ++j) {
    Rational v = eval(f.psi[j - 1], point);
    if (contains(f.J, j) && v != 0) return false;
    if (!contains(f.I, j) && v == 0) return false;
  }
  return true;
}

bool cell_test_phi(const Subexpression& g, const std::vector<Rational>& point) {
  Subexpression full = Subexpression::full(g.setup_ptr());
  auto ws = phi_n(g.setup().data(), point_tuple(full, point));
  return ws == gamma_powers(g);
}

std::vector<Rational> psi_coords(const PsiFamily& f, const std::vector<Rational>& point) {
  if (!cell_test_psi(f, point)) throw InvalidInput("point is not in the cell");
  std::vector<Rational> out;
  for (int j : f.K) out.push_back(eval(f.psi[j - 1], point));
  const int n = static_cast<int>(f.psi.size());
  for (int j = 1; j <= n; ++j)
    if (!contains(f.I, j)) out.push_back(eval(f.psi[j - 1], point));
  return out;
}

std::vector<Rational> psi_solve(const PsiFamily& f, const std::vector<Rational>& values) {
  const int n = static_cast<int>(f.psi.size());
  std::vector<Rational> target(n, Rational(0));
  std::size_t pos = 0;
  auto take = [&]() {
    if (pos >= values.size()) throw InvalidInput("too few values for the cell coordinates");
    return values[pos++];
  };
  for (int j : f.K) target[j - 1] = take();
  for (int j = 1; j <= n; ++j)
    if (!contains(f.I, j)) {
      target[j - 1] = take();
      if (target[j - 1] == 0) throw InvalidInput("values off I(gamma) must be nonzero");
    }
  if (pos != values.size()) throw InvalidInput("too many values for the cell coordinates");
  std::vector<Rational> z(n, Rational(0));
  for (int j = 1; j <= n; ++j) {
    // L_j, M_j only involve z_1..z_{j-1}; later entries of z are still zero.
    Rational L = eval(f.splits[j - 1].first, z);
    Rational M = eval(f.splits[j - 1].second, z);
    if (M == 0) throw FactorizationFailed("M_" + std::to_string(j) + " vanishes");
    z[j - 1] = (target[j - 1] - L) / M;
  }
  return z;
}

}  // namespace dbs
