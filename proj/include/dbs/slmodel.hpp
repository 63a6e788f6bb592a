#pragma once

// SL(m, Q) realisation of type A_{m-1}.
//
//   x_{alpha_i}(z)  = 1 + z E_{i,i+1}
//   x_{-alpha_i}(z) = 1 + z E_{i+1,i}
//   sbar_i          = 1 with the block (0 -1; 1 0) on rows/columns i, i+1
//   coroot_i(t)     = diag(.., t, 1/t, ..) at positions i, i+1
//
// Group elements are carried together with their inverses (Invertible<T>),
// for T = Rational (points) and T = MPoly (symbolic sections).

#include <vector>

#include "dbs/polyring.hpp"
#include "dbs/shuffles.hpp"

namespace dbs {

template <class T>
struct Scalars;

template <>
struct Scalars<Rational> {
  Rational zero{0}, one{1};
  Rational lift(const Rational& q) const { return q; }
};

template <>
struct Scalars<MPoly> {
  MPoly zero, one;
  explicit Scalars(int nvars) : zero(nvars), one(MPoly::constant(nvars, 1)) {}
  MPoly lift(const Rational& q) const { return MPoly::constant(zero.nvars(), q); }
};

inline bool entry_is_zero(const Rational& q) { return q == 0; }
inline bool entry_is_zero(const MPoly& p) { return p.is_zero(); }

using QElem = Invertible<Rational>;
using PElem = Invertible<MPoly>;

/// Throws InvalidInput unless the root datum is A_r; returns m = r + 1.
int sl_size(const CartanData& data);

// Chevalley generators.
template <class T>
Invertible<T> x_root(int m, int i, int sign, const T& z, const Scalars<T>& sc);
template <class T>
Invertible<T> sbar(int m, int i, const Scalars<T>& sc);
template <class T>
Invertible<T> identity_elem(int m, const Scalars<T>& sc);
QElem coroot(int m, int i, const Rational& t);
/// Diagonal matrix with the given entries (product must be 1).
QElem torus(const std::vector<Rational>& diag);

/// wbar over the canonical reduced word.
QElem wbar(const WeylElement& w);
/// Product of sbar over an arbitrary word.
QElem wbar_word(CartanPtr data, const std::vector<int>& word);

template <class T>
Invertible<T> lift_elem(const QElem& g, const Scalars<T>& sc);

struct LDU {
  QMatrix lower, diag, upper;
};
/// x = [x]_- [x]_0 [x]_+; throws DecompositionUndefined when a leading
/// principal minor vanishes.
LDU gauss_ldu(const QMatrix& x);

/// The unique w with x in B_- w B (x invertible).
WeylElement bruhat_class(CartanPtr data, const QMatrix& x);

/// [g]_- and [g]_+ for g a unit triangular matrix (root-group conjugates);
/// rational inputs fall back to gauss_ldu.
template <class T>
Invertible<T> minus_part(const Invertible<T>& g, const Scalars<T>& sc);
template <class T>
Invertible<T> plus_part(const Invertible<T>& g, const Scalars<T>& sc);

/// Representatives tilde(gamma)^0..tilde(gamma)^n built from the chosen
/// sbar factors on the eps-determined side.
std::vector<QElem> gamma_reps(const Subexpression& g);

template <class T>
struct Section {
  Invertible<T> p, q;
};

/// (p_{gamma,j}(z), q_{gamma,j}(z)), j is 1-based.
template <class T>
Section<T> section_pq(const Subexpression& g, int j, const T& z, const Scalars<T>& sc);

/// Symbolic sections with z_j the j-th of n variables.
std::vector<Section<MPoly>> symbolic_sections(const Subexpression& g);

using Tuple = std::vector<Section<Rational>>;

/// u_gamma(z) at a rational point.
Tuple point_tuple(const Subexpression& g, const std::vector<Rational>& coords);

/// (h_1 ... h_j)^{-1} g_1 ... g_j for each j.
std::vector<QMatrix> partial_quotients(const Tuple& t);

/// Phi_n: the Bruhat class of each partial quotient.
std::vector<WeylElement> phi_n(CartanPtr data, const Tuple& t);

/// q_n^{-1} ... q_1^{-1} p_1 ... p_n; requires coords to vanish on J(gamma).
QMatrix chain_product(const Subexpression& g, const std::vector<Rational>& coords);

/// Coordinates of the point represented by `t` in the chart of `target`.
/// Throws FactorizationFailed when the point is outside that chart.
std::vector<Rational> chart_coordinates(const Subexpression& target, const Tuple& t);

/// z with u(z) = u_gamma(xi) in the chart of the full subexpression.
std::vector<Rational> factorize_to_z(const Subexpression& g, const std::vector<Rational>& xi);

/// h^lambda for diagonal h, lambda in the fundamental-weight basis.
Rational torus_character(const QMatrix& h, const Weight& lambda);

/// Left action of h on the first pair of the tuple.
Tuple act_torus(const QMatrix& h, const Tuple& t);

/// g_w(z) of the double-subexpression parametrisation.
QMatrix wy_g(const Subexpression& g, const std::vector<Rational>& z);

struct SignSearch {
  bool found = false;
  std::vector<int> signs;  // one of +1/-1 per position
  int candidates_tried = 0;
};

/// Searches the 2^n sign vectors e with
///   (p_1..p_n)^{-1} g_w(e z) gbar_u in B and (q_1..q_n)^{-1} g_w(e z) gbar_v in B_-.
SignSearch wy_sign_search(const Subexpression& g, const std::vector<Rational>& z);

}  // namespace dbs
