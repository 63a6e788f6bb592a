#include "dbs/monomial.hpp"

#include <algorithm>

#include "dbs/sampling.hpp"

namespace dbs {

namespace {

bool contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

void check_positive(const Subexpression& g) {
  if (!is_positive(g)) throw InvalidInput("mask " + g.to_string() + " is not positive");
}

void check_unit_lower(const MonomialMatrix& m) {
  const int s = m.size();
  if (static_cast<int>(m.entries.size()) != s) throw InvalidInput("monomial matrix shape");
  for (int a = 0; a < s; ++a) {
    if (static_cast<int>(m.entries[a].size()) != s) throw InvalidInput("monomial matrix shape");
    if (m.entries[a][a] != 1) throw InvalidInput("monomial matrix diagonal is not 1");
    for (int b = a + 1; b < s; ++b)
      if (m.entries[a][b] != 0) throw InvalidInput("monomial matrix is not lower triangular");
  }
}

MonomialMatrix blank_like(const MonomialMatrix& m) {
  MonomialMatrix out;
  out.indices = m.indices;
  out.entries.assign(m.size(), std::vector<long>(m.size(), 0));
  return out;
}

}  // namespace

std::pair<WeylElement, WeylElement> interval_words(const ShuffleSetup& setup, int k, int j) {
  if (k < 1 || j > setup.n() || k >= j) throw InvalidInput("interval needs 1 <= k < j <= n");
  std::vector<int> uw, vw;
  for (int i = k + 1; i <= j; ++i) (setup.eps(i) == -1 ? uw : vw).push_back(setup.delta(i));
  return {WeylElement::from_word(setup.data(), uw), WeylElement::from_word(setup.data(), vw)};
}

long m_exponent(const Subexpression& g, int j, int k) {
  const auto& s = g.setup();
  if (j < 1 || j > g.n() || k < 1 || k > j) throw InvalidInput("m_{j,k} needs 1 <= k <= j <= n");
  auto J = j_set(g);
  if (contains(J, j) || contains(J, k)) throw InvalidInput("m_{j,k} indices must lie outside J");
  if (k == j) return 1;
  const auto& data = *s.data();
  Weight lambda = fundamental_weight(data, s.delta(j));
  WeylElement gj = gamma_powers(g)[j - 1];
  auto [uw, vw] = interval_words(s, k, j);
  Weight x;
  if (s.eps(j) == -1)
    x = s.eps(k) == 1 ? vw.act(gj.act(lambda)) : uw.act(lambda);
  else
    x = s.eps(k) == 1 ? vw.act(lambda) : uw.act(inv(gj).act(lambda));
  return x.pairing(s.delta(k));
}

MonomialMatrix monomial_matrix(const Subexpression& g) {
  check_positive(g);
  auto J = j_set(g);
  MonomialMatrix m;
  for (int j = 1; j <= g.n(); ++j)
    if (!contains(J, j)) m.indices.push_back(j);
  const int s = m.size();
  m.entries.assign(s, std::vector<long>(s, 0));
  for (int a = 0; a < s; ++a)
    for (int b = 0; b <= a; ++b) m.entries[a][b] = m_exponent(g, m.indices[a], m.indices[b]);
  return m;
}

MonomialMatrix l_matrix_direct(const MonomialMatrix& m) {
  check_unit_lower(m);
  // Column by column: solve M x = e_c.
  MonomialMatrix l = blank_like(m);
  const int s = m.size();
  for (int c = 0; c < s; ++c) {
    l.entries[c][c] = 1;
    for (int r = c + 1; r < s; ++r) {
      long acc = 0;
      for (int i = c; i < r; ++i) acc += m.entries[r][i] * l.entries[i][c];
      l.entries[r][c] = -acc;
    }
  }
  return l;
}

MonomialMatrix l_matrix_recursive(const MonomialMatrix& m) {
  check_unit_lower(m);
  MonomialMatrix l = blank_like(m);
  const int s = m.size();
  for (int a = 0; a < s; ++a) l.entries[a][a] = 1;
  for (int gap = 1; gap < s; ++gap)
    for (int k = 0; k + gap < s; ++k) {
      const int j = k + gap;
      long acc = 0;
      for (int i = k + 1; i < j; ++i) acc += l.entries[j][i] * m.entries[i][k];
      l.entries[j][k] = -acc - m.entries[j][k];
    }
  return l;
}

MonomialMatrix l_matrix(const MonomialMatrix& m) {
  MonomialMatrix a = l_matrix_direct(m), b = l_matrix_recursive(m);
  if (!(a == b)) throw Error("triangular inverse and entry recursion disagree");
  return a;
}

MonomialMatrix multiply(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.indices != b.indices) throw InvalidInput("monomial matrices over different index sets");
  MonomialMatrix out = blank_like(a);
  const int s = a.size();
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      long acc = 0;
      for (int i = 0; i < s; ++i) acc += a.entries[r][i] * b.entries[i][c];
      out.entries[r][c] = acc;
    }
  return out;
}

bool is_identity(const MonomialMatrix& m) {
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c)
      if (m.entries[r][c] != (r == c ? 1 : 0)) return false;
  return true;
}

long inverse_closed_form(const Subexpression& g, int j, int k) {
  const auto& s = g.setup();
  if (!s.v_word().empty()) throw InvalidInput("closed form needs an empty v");
  check_positive(g);
  if (k < 1 || j > g.n() || k >= j) throw InvalidInput("closed form needs 1 <= k < j <= n");
  auto J = j_set(g);
  if (contains(J, j) || contains(J, k)) throw InvalidInput("closed form indices must lie outside J");
  const auto& data = *s.data();
  Weight x = reflect_weight(data, s.delta(j), fundamental_weight(data, s.delta(j)));
  for (int i = j - 1; i > k; --i)
    x = contains(J, i) ? reflect_weight(data, s.delta(i), x) : r_alpha(data, s.delta(i), x);
  return -x.pairing(s.delta(k));
}

std::vector<ClosedFormMismatch> closed_form_compare(const Subexpression& g) {
  MonomialMatrix m = monomial_matrix(g);
  MonomialMatrix l = l_matrix(m);
  std::vector<ClosedFormMismatch> out;
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < a; ++b) {
      long cf = inverse_closed_form(g, m.indices[a], m.indices[b]);
      if (cf != l.entries[a][b]) out.push_back({m.indices[a], m.indices[b], cf, l.entries[a][b]});
    }
  return out;
}

MonomialReport verify_monomial(const Subexpression& g, int samples, std::uint64_t seed) {
  if (samples < 0) throw InvalidInput("sample count must be nonnegative");
  MonomialReport rep;
  rep.mask = g.to_string();
  rep.M = monomial_matrix(g);
  rep.L = l_matrix(rep.M);
  rep.samples_requested = samples;
  PsiFamily fam = psi_family(g);
  const int n = g.n();
  auto J = j_set(g);
  Sampler rng(seed);
  const int max_attempts = 20 * samples + 20;
  int attempts = 0;
  while (static_cast<int>(rep.samples.size()) < samples) {
    if (++attempts > max_attempts) throw FactorizationFailed("too many resamples in verify_monomial");
    MonomialSample smp;
    smp.xi.assign(n, Rational(0));
    for (int j = 1; j <= n; ++j)
      if (!contains(J, j)) smp.xi[j - 1] = rng.nonzero_rational();
    try {
      smp.z = factorize_to_z(g, smp.xi);
    } catch (const FactorizationFailed&) {
      ++rep.resampled;
      continue;
    }
    bool exact = true, up_to_sign = true;
    for (int a = 0; a < rep.M.size(); ++a) {
      const int j = rep.M.indices[a];
      Rational expect = 1;
      for (int b = 0; b <= a; ++b)
        expect *= pow(smp.xi[rep.M.indices[b] - 1], -rep.M.entries[a][b]);
      Rational got = eval(fam.psi[j - 1], smp.z);
      if (got == expect) {
        smp.unit.push_back(1);
      } else if (got == -expect) {
        smp.unit.push_back(-1);
        exact = false;
      } else {
        smp.unit.push_back(0);
        smp.failed_indices.push_back(j);
        exact = false;
        up_to_sign = false;
      }
    }
    if (!exact) {
      ++rep.exact_failures;
      if (up_to_sign) ++rep.sign_only;
    }
    rep.samples.push_back(std::move(smp));
  }
  return rep;
}

}  // namespace dbs
