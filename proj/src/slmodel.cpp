#include "dbs/slmodel.hpp"

#include <algorithm>
#include <type_traits>

namespace dbs {

int sl_size(const CartanData& data) {
  if (!data.is_type_a())
    throw InvalidInput("the matrix model is only available for type A (got " +
                       data.type_label() + ")");
  return data.rank() + 1;
}

namespace {

void check_root_index(int m, int i) {
  if (i < 1 || i >= m)
    throw InvalidInput("simple root index " + std::to_string(i) + " out of range for SL(" +
                       std::to_string(m) + ")");
}

template <class T>
bool unit_lower(const Matrix<T>& a, const Scalars<T>& sc) {
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      if (r == c && !(a(r, c) == sc.one)) return false;
      if (c > r && !entry_is_zero(a(r, c))) return false;
    }
  return true;
}

template <class T>
bool unit_upper(const Matrix<T>& a, const Scalars<T>& sc) {
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      if (r == c && !(a(r, c) == sc.one)) return false;
      if (c < r && !entry_is_zero(a(r, c))) return false;
    }
  return true;
}

// Inverse of a unit lower triangular rational matrix.
QMatrix unit_lower_inverse(const QMatrix& l) {
  const int m = l.rows();
  QMatrix x = q_identity(m);
  for (int c = 0; c < m; ++c)
    for (int r = c + 1; r < m; ++r) {
      Rational s = 0;
      for (int k = c; k < r; ++k) s += l(r, k) * x(k, c);
      x(r, c) = -s;
    }
  return x;
}

QMatrix unit_upper_inverse(const QMatrix& u) {
  return unit_lower_inverse(u.transpose()).transpose();
}

}  // namespace

template <class T>
Invertible<T> identity_elem(int m, const Scalars<T>& sc) {
  auto id = Matrix<T>::identity(m, sc.zero, sc.one);
  return {id, id};
}

template <class T>
Invertible<T> x_root(int m, int i, int sign, const T& z, const Scalars<T>& sc) {
  check_root_index(m, i);
  Invertible<T> g = identity_elem(m, sc);
  if (sign > 0) {
    g.mat(i - 1, i) = z;
    g.inv(i - 1, i) = T(-z);
  } else {
    g.mat(i, i - 1) = z;
    g.inv(i, i - 1) = T(-z);
  }
  return g;
}

template <class T>
Invertible<T> sbar(int m, int i, const Scalars<T>& sc) {
  check_root_index(m, i);
  Invertible<T> g = identity_elem(m, sc);
  T minus_one = T(-sc.one);
  g.mat(i - 1, i - 1) = sc.zero;
  g.mat(i, i) = sc.zero;
  g.mat(i - 1, i) = minus_one;
  g.mat(i, i - 1) = sc.one;
  g.inv = g.mat.transpose();
  return g;
}

QElem coroot(int m, int i, const Rational& t) {
  check_root_index(m, i);
  if (t == 0) throw InvalidInput("coroot parameter must be nonzero");
  std::vector<Rational> d(m, Rational(1));
  d[i - 1] = t;
  d[i] = 1 / t;
  return torus(d);
}

QElem torus(const std::vector<Rational>& diag) {
  const int m = static_cast<int>(diag.size());
  Rational prod = 1;
  for (const auto& d : diag) prod *= d;
  if (prod != 1) throw InvalidInput("torus element must have determinant 1");
  QElem h{q_identity(m), q_identity(m)};
  for (int k = 0; k < m; ++k) {
    h.mat(k, k) = diag[k];
    h.inv(k, k) = 1 / diag[k];
  }
  return h;
}

QElem wbar_word(CartanPtr data, const std::vector<int>& word) {
  const int m = sl_size(*data);
  Scalars<Rational> sc;
  QElem g = identity_elem(m, sc);
  for (int i : word) g = g * sbar(m, i, sc);
  return g;
}

QElem wbar(const WeylElement& w) { return wbar_word(w.data(), reduced_word(w)); }

template <class T>
Invertible<T> lift_elem(const QElem& g, const Scalars<T>& sc) {
  if constexpr (std::is_same_v<T, Rational>) {
    (void)sc;
    return g;
  } else {
    auto f = [&sc](const Rational& q) { return sc.lift(q); };
    return {g.mat.map(f), g.inv.map(f)};
  }
}

LDU gauss_ldu(const QMatrix& x) {
  if (!x.square()) throw InvalidInput("gauss_ldu needs a square matrix");
  const int m = x.rows();
  QMatrix a = x;
  QMatrix l = q_identity(m);
  for (int k = 0; k < m; ++k) {
    if (a(k, k) == 0)
      throw DecompositionUndefined("leading principal minor of order " + std::to_string(k + 1) +
                                   " vanishes");
    for (int i = k + 1; i < m; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      l(i, k) = f;
      for (int j = k; j < m; ++j) a(i, j) -= f * a(k, j);
    }
  }
  QMatrix d = q_identity(m), u = q_identity(m);
  for (int k = 0; k < m; ++k) {
    d(k, k) = a(k, k);
    for (int j = k; j < m; ++j) u(k, j) = a(k, j) / a(k, k);
  }
  return {l, d, u};
}

WeylElement bruhat_class(CartanPtr data, const QMatrix& x) {
  const int m = sl_size(*data);
  if (x.rows() != m || x.cols() != m) throw InvalidInput("matrix size does not match SL(m)");
  // rk[r][c] = rank of the top-left r x c block; invariant under B_- x B.
  std::vector<std::vector<int>> rk(m + 1, std::vector<int>(m + 1, 0));
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= m; ++c) rk[r][c] = rank(x.leading(r, c));
  if (rk[m][m] != m) throw InvalidInput("bruhat_class needs an invertible matrix");
  std::vector<int> perm(m);
  for (int c = 1; c <= m; ++c) {
    int row = 0;
    for (int r = 1; r <= m; ++r)
      if (rk[r][c] - rk[r][c - 1] == 1) {
        row = r;
        break;
      }
    perm[c - 1] = row;
  }
  return from_permutation(std::move(data), perm);
}

template <class T>
Invertible<T> minus_part(const Invertible<T>& g, const Scalars<T>& sc) {
  if (unit_lower(g.mat, sc)) return g;
  if (unit_upper(g.mat, sc)) return identity_elem(g.mat.rows(), sc);
  if constexpr (std::is_same_v<T, Rational>) {
    QMatrix l = gauss_ldu(g.mat).lower;
    return {l, unit_lower_inverse(l)};
  } else {
    throw InvalidInput("[x]_- of a symbolic matrix that is not unit triangular");
  }
}

template <class T>
Invertible<T> plus_part(const Invertible<T>& g, const Scalars<T>& sc) {
  if (unit_upper(g.mat, sc)) return g;
  if (unit_lower(g.mat, sc)) return identity_elem(g.mat.rows(), sc);
  if constexpr (std::is_same_v<T, Rational>) {
    QMatrix u = gauss_ldu(g.mat).upper;
    return {u, unit_upper_inverse(u)};
  } else {
    throw InvalidInput("[x]_+ of a symbolic matrix that is not unit triangular");
  }
}

std::vector<QElem> gamma_reps(const Subexpression& g) {
  const auto& s = g.setup();
  const int m = sl_size(*s.data());
  Scalars<Rational> sc;
  std::vector<QElem> reps{identity_elem(m, sc)};
  for (int j = 1; j <= g.n(); ++j) {
    QElem bar = g.in_mask(j) ? sbar(m, s.delta(j), sc) : identity_elem(m, sc);
    reps.push_back(s.eps(j) == -1 ? reps.back() * bar : bar * reps.back());
  }
  return reps;
}

namespace {

template <class T>
Section<T> section_with_rep(const Subexpression& g, int j, const T& z, const Scalars<T>& sc,
                            const QElem& rep_prev) {
  const auto& s = g.setup();
  const int m = sl_size(*s.data());
  const int i = s.delta(j);
  const bool on = g.in_mask(j);
  Invertible<T> rep = lift_elem(rep_prev, sc);
  Invertible<T> bar = on ? sbar(m, i, sc) : identity_elem(m, sc);
  if (s.eps(j) == -1) {
    // x_{-gamma_j alpha_j}(z)
    Invertible<T> x = x_root(m, i, on ? +1 : -1, z, sc);
    return {x * bar, minus_part(rep * x * rep.inverse(), sc)};
  }
  // x_{gamma_j alpha_j}(z)
  Invertible<T> x = x_root(m, i, on ? -1 : +1, z, sc);
  return {plus_part(rep.inverse() * x * rep, sc), x * bar.inverse()};
}

}  // namespace

template <class T>
Section<T> section_pq(const Subexpression& g, int j, const T& z, const Scalars<T>& sc) {
  if (j < 1 || j > g.n()) throw InvalidInput("section index out of range");
  return section_with_rep(g, j, z, sc, gamma_reps(g)[j - 1]);
}

std::vector<Section<MPoly>> symbolic_sections(const Subexpression& g) {
  const int n = g.n();
  Scalars<MPoly> sc(n);
  auto reps = gamma_reps(g);
  std::vector<Section<MPoly>> out;
  for (int j = 1; j <= n; ++j)
    out.push_back(section_with_rep(g, j, MPoly::variable(n, j), sc, reps[j - 1]));
  return out;
}

Tuple point_tuple(const Subexpression& g, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != g.n())
    throw InvalidInput("expected " + std::to_string(g.n()) + " coordinates, got " +
                       std::to_string(coords.size()));
  Scalars<Rational> sc;
  auto reps = gamma_reps(g);
  Tuple t;
  for (int j = 1; j <= g.n(); ++j) t.push_back(section_with_rep(g, j, coords[j - 1], sc, reps[j - 1]));
  return t;
}

std::vector<QMatrix> partial_quotients(const Tuple& t) {
  std::vector<QMatrix> out;
  if (t.empty()) return out;
  QElem G = t[0].p, H = t[0].q;
  out.push_back(H.inv * G.mat);
  for (std::size_t j = 1; j < t.size(); ++j) {
    G = G * t[j].p;
    H = H * t[j].q;
    out.push_back(H.inv * G.mat);
  }
  return out;
}

std::vector<WeylElement> phi_n(CartanPtr data, const Tuple& t) {
  std::vector<WeylElement> out;
  for (const auto& x : partial_quotients(t)) out.push_back(bruhat_class(data, x));
  return out;
}

QMatrix chain_product(const Subexpression& g, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != g.n()) throw InvalidInput("coordinate count mismatch");
  for (int j : j_set(g))
    if (coords[j - 1] != 0)
      throw InvalidInput("coordinate z" + std::to_string(j) + " must vanish (position in J)");
  auto q = partial_quotients(point_tuple(g, coords));
  if (q.empty()) return q_identity(sl_size(*g.setup().data()));
  return q.back();
}

std::vector<Rational> chart_coordinates(const Subexpression& target, const Tuple& t) {
  const auto& s = target.setup();
  const int n = target.n();
  if (static_cast<int>(t.size()) != n) throw InvalidInput("tuple length mismatch");
  const int m = sl_size(*s.data());
  Scalars<Rational> sc;
  auto reps = gamma_reps(target);
  QMatrix b = q_identity(m), bm = q_identity(m);
  std::vector<Rational> z(n);
  for (int j = 1; j <= n; ++j) {
    const int i = s.delta(j);
    QMatrix G = b * t[j - 1].p.mat;
    QMatrix H = bm * t[j - 1].q.mat;
    // The critical entry is affine in z: (i+1, i) of p^{-1} G, or (i, i+1) of q^{-1} H.
    auto entry = [&](const Rational& x) {
      auto sec = section_with_rep(target, j, x, sc, reps[j - 1]);
      return s.eps(j) == -1 ? (sec.p.inv * G)(i, i - 1) : (sec.q.inv * H)(i - 1, i);
    };
    Rational f0 = entry(0), slope = entry(1) - f0;
    if (slope == 0)
      throw FactorizationFailed("pivot vanished while solving for z" + std::to_string(j));
    z[j - 1] = -f0 / slope;
    auto sec = section_with_rep(target, j, z[j - 1], sc, reps[j - 1]);
    b = sec.p.inv * G;
    bm = sec.q.inv * H;
    if (!is_upper(b) || !is_lower(bm))
      throw FactorizationFailed("point leaves the chart at position " + std::to_string(j));
  }
  return z;
}

std::vector<Rational> factorize_to_z(const Subexpression& g, const std::vector<Rational>& xi) {
  return chart_coordinates(Subexpression::full(g.setup_ptr()), point_tuple(g, xi));
}

Rational torus_character(const QMatrix& h, const Weight& lambda) {
  if (!is_diagonal(h)) throw InvalidInput("torus character needs a diagonal matrix");
  if (lambda.rank() != h.rows() - 1) throw InvalidInput("weight rank does not match SL(m)");
  Rational out = 1, prefix = 1;
  for (int i = 1; i <= lambda.rank(); ++i) {
    prefix *= h(i - 1, i - 1);
    out *= pow(prefix, lambda.coords[i - 1]);
  }
  return out;
}

Tuple act_torus(const QMatrix& h, const Tuple& t) {
  if (t.empty()) return t;
  std::vector<Rational> d;
  for (int k = 0; k < h.rows(); ++k) d.push_back(h(k, k));
  QElem th = torus(d);
  Tuple out = t;
  out[0].p = th * out[0].p;
  out[0].q = th * out[0].q;
  return out;
}

QMatrix wy_g(const Subexpression& g, const std::vector<Rational>& z) {
  const auto& s = g.setup();
  const int m = sl_size(*s.data());
  if (static_cast<int>(z.size()) != g.n()) throw InvalidInput("coordinate count mismatch");
  Scalars<Rational> sc;
  auto sp = sided_powers(g);
  auto J = j_set(g);
  QElem acc = identity_elem(m, sc);
  for (int k = 1; k <= g.n(); ++k) {
    if (std::binary_search(J.begin(), J.end(), k)) continue;
    const int i = s.delta(k);
    QElem w = wbar(s.eps(k) == 1 ? sp.v[k - 1] : sp.u[k - 1]);
    QElem x = x_root(m, i, s.eps(k) == 1 ? +1 : -1, z[k - 1], sc);
    acc = acc * (w * x * w.inverse());
  }
  return acc.mat;
}

SignSearch wy_sign_search(const Subexpression& g, const std::vector<Rational>& z) {
  const int n = g.n();
  if (n > 20) throw LimitExceeded("sign search limited to n <= 20");
  Tuple t = point_tuple(g, z);
  const int m = sl_size(*g.setup().data());
  Scalars<Rational> sc;
  QElem P = identity_elem(m, sc), Q = P;
  for (const auto& sec : t) {
    P = P * sec.p;
    Q = Q * sec.q;
  }
  auto sp = sided_powers(g);
  QMatrix gu = n ? wbar(sp.u.back()).mat : q_identity(m);
  QMatrix gv = n ? wbar(sp.v.back()).mat : q_identity(m);
  SignSearch out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Rational> zs = z;
    std::vector<int> signs(n, 1);
    bool redundant = false;
    for (int k = 0; k < n; ++k)
      if ((mask >> k) & 1u) {
        if (z[k] == 0) redundant = true;
        signs[k] = -1;
        zs[k] = -z[k];
      }
    if (redundant) continue;
    ++out.candidates_tried;
    QMatrix G = wy_g(g, zs);
    if (is_upper(P.inv * G * gu) && is_lower(Q.inv * G * gv)) {
      out.found = true;
      out.signs = signs;
      return out;
    }
  }
  return out;
}

template Invertible<Rational> x_root(int, int, int, const Rational&, const Scalars<Rational>&);
template Invertible<MPoly> x_root(int, int, int, const MPoly&, const Scalars<MPoly>&);
template Invertible<Rational> sbar(int, int, const Scalars<Rational>&);
template Invertible<MPoly> sbar(int, int, const Scalars<MPoly>&);
template Invertible<Rational> identity_elem(int, const Scalars<Rational>&);
template Invertible<MPoly> identity_elem(int, const Scalars<MPoly>&);
template Invertible<Rational> lift_elem(const QElem&, const Scalars<Rational>&);
template Invertible<MPoly> lift_elem(const QElem&, const Scalars<MPoly>&);
template Invertible<Rational> minus_part(const Invertible<Rational>&, const Scalars<Rational>&);
template Invertible<MPoly> minus_part(const Invertible<MPoly>&, const Scalars<MPoly>&);
template Invertible<Rational> plus_part(const Invertible<Rational>&, const Scalars<Rational>&);
template Invertible<MPoly> plus_part(const Invertible<MPoly>&, const Scalars<MPoly>&);
template Section<Rational> section_pq(const Subexpression&, int, const Rational&,
                                      const Scalars<Rational>&);
template Section<MPoly> section_pq(const Subexpression&, int, const MPoly&, const Scalars<MPoly>&);

}  // namespace dbs
