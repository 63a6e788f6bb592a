#pragma once

// Sparse multivariate polynomials over Q in z1..zn.
//
// Term order: total degree first; ties are broken by comparing exponents from
// the highest-index variable downwards, the larger exponent ranking first.
// Terms are stored and printed in descending order, e.g. "z2*z5*z6 - z4*z5".

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dbs/matrix.hpp"

namespace dbs {

using Exponent = std::vector<int>;

struct TermOrder {
  // true when a ranks before b
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MPoly {
 public:
  using Terms = std::map<Exponent, Rational, TermOrder>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Rational& c);
  /// z_i with 1-based i.
  static MPoly variable(int nvars, int i);
  static MPoly monomial(const Exponent& e, const Rational& c);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws otherwise.
  Rational constant_value() const;
  int total_degree() const;
  int degree_in(int var) const;

  /// Coefficient of z_var^d, as a polynomial in the remaining variables.
  MPoly coefficient(int var, int d) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  void add_term(const Exponent& e, const Rational& c);

 private:
  int nvars_ = 0;
  Terms terms_;
};

MPoly pow(const MPoly& p, int e);

/// Exact value at a rational point (length must equal nvars).
Rational eval(const MPoly& p, const std::vector<Rational>& point);

/// Replaces z_i by assignments[i-1] where present.  Every replacement must
/// have the same nvars as p.
MPoly subst(const MPoly& p, const std::vector<std::optional<MPoly>>& assignments);
/// Convenience: fixes the listed variables to rational values.
MPoly subst_values(const MPoly& p, const std::map<int, Rational>& values);

/// p = L + z_var * M with L, M free of z_var.  Throws if p has degree > 1 in z_var.
std::pair<MPoly, MPoly> split_linear(const MPoly& p, int var);

/// Exact quotient p / d; throws Error when d does not divide p.
MPoly exact_div(const MPoly& p, const MPoly& d);

/// Canonical text form, e.g. "z2*z3 - z1", "3/2*z1^2 + 1", "0".
std::string to_string(const MPoly& p);

/// Parses +, -, *, ^, parentheses, rationals and variables z1..zn.
/// Factored input is expanded.
MPoly parse_poly(std::string_view text, int nvars);

using PolyMatrix = Matrix<MPoly>;

PolyMatrix poly_identity(int k, int nvars);
PolyMatrix lift(const QMatrix& m, int nvars);
QMatrix eval(const PolyMatrix& m, const std::vector<Rational>& point);

/// Cofactor expansion for k <= 6, fraction-free elimination above.
MPoly det(const PolyMatrix& m);
MPoly det_cofactor(const PolyMatrix& m);
MPoly det_bareiss(const PolyMatrix& m);

}  // namespace dbs
