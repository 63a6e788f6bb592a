#pragma once

// Generalised minors and the functions psi_{gamma,j} on the big chart.

#include <vector>

#include "dbs/slmodel.hpp"

namespace dbs {

/// Leading principal i x i minor.
Rational delta_lambda(int i, const QMatrix& x);
MPoly delta_lambda(int i, const PolyMatrix& x);

/// Delta_{lambda_i}(ubar^{-1} x vbar).
Rational gen_minor(const WeylElement& u, const WeylElement& v, int i, const QMatrix& x);

/// Determinant of the rows u({1..i}) and columns v({1..i}), each sorted.
Rational submatrix_minor(const WeylElement& u, const WeylElement& v, int i, const QMatrix& x);

/// g_j(z_1..z_j) built from the sections of the full subexpression, as a
/// polynomial matrix in z_1..z_n.
PolyMatrix g_matrix(SetupPtr setup, int j);

struct PsiFamily {
  SetupPtr setup;
  std::vector<bool> mask;
  std::vector<int> J, I, K;
  std::vector<MPoly> psi;                       // psi_1..psi_n
  std::vector<std::pair<MPoly, MPoly>> splits;  // (L_j, M_j)
};

/// Requires a distinguished gamma.
PsiFamily psi_family(const Subexpression& g);
MPoly psi(const Subexpression& g, int j);

std::pair<MPoly, MPoly> psi_split(const PsiFamily& f, int j);

/// psi_j = 0 on J and psi_j != 0 off I.
bool cell_test_psi(const PsiFamily& f, const std::vector<Rational>& point);

/// Membership through Phi_n on the full chart: w_j = gamma^j for all j.
bool cell_test_phi(const Subexpression& g, const std::vector<Rational>& point);

/// ((psi_j)_{j in K}, (psi_j)_{j not in I}); throws InvalidInput off the cell.
std::vector<Rational> psi_coords(const PsiFamily& f, const std::vector<Rational>& point);

/// Inverts psi_coords: solves psi_j = x_j for z_j in increasing j, with
/// x_j = 0 for j in J.
std::vector<Rational> psi_solve(const PsiFamily& f, const std::vector<Rational>& values);

}  // namespace dbs
