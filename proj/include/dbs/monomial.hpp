#pragma once

// Exponent matrix M_gamma relating psi_gamma to the chart coordinates xi of
// a positive gamma, and its inverse L_gamma.

#include <cstdint>
#include <string>
#include <vector>

#include "dbs/minorfns.hpp"

namespace dbs {

/// (u_(k,j), v_(k,j)): increasing products of delta_i over k < i <= j split by eps.
std::pair<WeylElement, WeylElement> interval_words(const ShuffleSetup& setup, int k, int j);

/// m_{j,k} for positive gamma, j and k outside J(gamma), k <= j.
long m_exponent(const Subexpression& g, int j, int k);

struct MonomialMatrix {
  std::vector<int> indices;              // [1,n] \ J(gamma), ascending
  std::vector<std::vector<long>> entries;  // entries[a][b], a, b index into `indices`

  int size() const { return static_cast<int>(indices.size()); }
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

MonomialMatrix monomial_matrix(const Subexpression& g);

/// Inverse by forward substitution (solves M L = 1).
MonomialMatrix l_matrix_direct(const MonomialMatrix& m);
/// Inverse by the entry recursion l_jk = -sum_{k<i<j} l_ji m_ik - m_jk.
MonomialMatrix l_matrix_recursive(const MonomialMatrix& m);
/// Both routes; throws Error if they disagree or if M is not unit lower triangular.
MonomialMatrix l_matrix(const MonomialMatrix& m);

MonomialMatrix multiply(const MonomialMatrix& a, const MonomialMatrix& b);
bool is_identity(const MonomialMatrix& m);

/// Closed form for the (j, k) entry of L_gamma when v is empty:
///   -(t_{k+1} ... t_{j-1} s_j lambda_j, coroot_k),
/// t_i = s_i on J(gamma) and r_i elsewhere.  Throws InvalidInput if v is nonempty.
long inverse_closed_form(const Subexpression& g, int j, int k);

struct ClosedFormMismatch {
  int j = 0, k = 0;
  long closed_form = 0, inverse_entry = 0;
};
std::vector<ClosedFormMismatch> closed_form_compare(const Subexpression& g);

struct MonomialSample {
  std::vector<Rational> xi, z;
  std::vector<int> failed_indices;  // j with psi_j(z) != +-monomial
  std::vector<int> unit;            // per index in M.indices: +1, -1, or 0 on failure
};

struct MonomialReport {
  std::string mask;
  MonomialMatrix M, L;
  int samples_requested = 0;
  int resampled = 0;
  std::vector<MonomialSample> samples;
  int exact_failures = 0;  // samples where some psi_j differs from the monomial
  int sign_only = 0;       // samples equal only up to a sign
  bool passed() const { return exact_failures == 0; }
};

/// psi_j(z(xi)) against prod xi_k^{-m_{j,k}} at seeded xi (zero on J, nonzero off J).
MonomialReport verify_monomial(const Subexpression& g, int samples, std::uint64_t seed);

}  // namespace dbs
