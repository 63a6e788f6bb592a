#include "dbs/matrix.hpp"

#include <sstream>

namespace dbs {

Rational det(const QMatrix& m) {
  if (!m.square()) throw InvalidInput("determinant of a non-square matrix");
  const int k = m.rows();
  QMatrix a = m;
  Rational d = 1;
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int r = c; r < k; ++r)
      if (a(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < k; ++j) std::swap(a(piv, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (int r = c + 1; r < k; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (int j = c; j < k; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return d;
}

int rank(const QMatrix& m) {
  QMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_lower(const QMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool is_upper(const QMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < i && j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool is_diagonal(const QMatrix& m) { return is_lower(m) && is_upper(m); }

bool is_unit_lower(const QMatrix& m) {
  if (!is_lower(m)) return false;
  for (int i = 0; i < m.rows(); ++i)
    if (m(i, i) != 1) return false;
  return true;
}

bool is_unit_upper(const QMatrix& m) {
  if (!is_upper(m)) return false;
  for (int i = 0; i < m.rows(); ++i)
    if (m(i, i) != 1) return false;
  return true;
}

}  // namespace dbs
