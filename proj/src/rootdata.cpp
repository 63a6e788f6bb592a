#include "dbs/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

namespace dbs {

long Weight::pairing(int k) const {
  if (k < 1 || k > rank()) throw InvalidInput("coroot index out of range");
  return coords[k - 1];
}

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw InvalidInput("weight rank mismatch");
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight Weight::operator*(long s) const {
  Weight r = *this;
  for (auto& c : r.coords) c *= s;
  return r;
}

bool RootVector::is_positive() const {
  bool nonzero = false;
  for (long c : coords) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

bool RootVector::is_negative() const { return (-*this).is_positive(); }

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
  os << ']';
  return os.str();
}

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix blank(int r) {
  IntMatrix a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  return a;
}

void link(IntMatrix& a, int i, int j, int aij = -1, int aji = -1) {
  a[i - 1][j - 1] = aij;
  a[j - 1][i - 1] = aji;
}

IntMatrix build_type(char family, int r) {
  IntMatrix a = blank(r);
  switch (family) {
    case 'A':
      for (int i = 1; i < r; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < r - 1; ++i) link(a, i, i + 1);
      // alpha_r short: (alpha_{r-1}, coroot_r) = -2.
      link(a, r - 1, r, -1, -2);
      break;
    case 'C':
      for (int i = 1; i < r - 1; ++i) link(a, i, i + 1);
      link(a, r - 1, r, -2, -1);
      break;
    case 'D':
      for (int i = 1; i < r - 1; ++i) link(a, i, i + 1);
      link(a, r - 2, r);
      break;
    case 'E':
      link(a, 1, 3);
      link(a, 3, 4);
      link(a, 2, 4);
      for (int i = 4; i < r; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 1, 2);
      link(a, 2, 3, -1, -2);
      link(a, 3, 4);
      break;
    case 'G':
      link(a, 1, 2, -3, -1);
      break;
    default:
      throw InvalidInput(std::string("unknown Cartan family '") + family + "'");
  }
  return a;
}

bool valid_rank(char family, int r) {
  switch (family) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
  }
}

// Leading principal minors via exact elimination.
bool all_leading_minors_positive(const IntMatrix& a) {
  const int r = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = a[i][j];
  Rational minor = 1;
  for (int k = 0; k < r; ++k) {
    // No pivoting: the k-th pivot is the ratio of consecutive leading minors.
    if (m[k][k] <= 0) return false;
    minor *= m[k][k];
    for (int i = k + 1; i < r; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (int j = k; j < r; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return minor > 0;
}

}  // namespace

CartanData::CartanData(std::vector<int> a, int rank, std::string label)
    : rank_(rank), a_(std::move(a)), label_(std::move(label)) {
  type_a_ = true;
  for (int i = 1; i <= rank_ && type_a_; ++i)
    for (int j = 1; j <= rank_; ++j) {
      int expect = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (cartan(i, j) != expect) {
        type_a_ = false;
        break;
      }
    }

  // Close the simple roots under reflections.
  std::set<std::vector<long>> seen;
  std::vector<RootVector> frontier;
  for (int i = 1; i <= rank_; ++i) {
    RootVector s = simple_root(*this, i);
    seen.insert(s.coords);
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier)
      for (int i = 1; i <= rank_; ++i) {
        RootVector g = reflect_root(*this, i, beta);
        if (g.is_positive() && seen.insert(g.coords).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  for (const auto& c : seen) positive_roots_.emplace_back(c);
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const RootVector& x, const RootVector& y) {
              long hx = 0, hy = 0;
              for (long c : x.coords) hx += c;
              for (long c : y.coords) hy += c;
              if (hx != hy) return hx < hy;
              return x.coords > y.coords;
            });
}

std::shared_ptr<const CartanData> CartanData::from_type(std::string_view label) {
  if (label.size() < 2) throw InvalidInput("bad Cartan type '" + std::string(label) + "'");
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int r = 0;
  for (char c : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidInput("bad Cartan type '" + std::string(label) + "'");
    r = r * 10 + (c - '0');
    if (r > 64) throw InvalidInput("Cartan rank too large in '" + std::string(label) + "'");
  }
  if (!valid_rank(family, r))
    throw InvalidInput("unsupported Cartan type '" + std::string(label) + "'");
  std::string canon = std::string(1, family) + std::to_string(r);
  return from_matrix(build_type(family, r), canon);
}

std::shared_ptr<const CartanData> CartanData::from_matrix(std::vector<std::vector<int>> a,
                                                          std::string label) {
  const int r = static_cast<int>(a.size());
  if (r == 0) throw InvalidInput("empty Cartan matrix");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != r) throw InvalidInput("Cartan matrix is not square");
  for (int i = 0; i < r; ++i) {
    if (a[i][i] != 2) throw InvalidInput("Cartan matrix diagonal entries must be 2");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw InvalidInput("Cartan matrix off-diagonal entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw InvalidInput("Cartan matrix zero pattern is not symmetric");
    }
  }
  if (!all_leading_minors_positive(a))
    throw InvalidInput("Cartan matrix is not of finite type (a leading principal minor is <= 0)");
  std::vector<int> flat;
  flat.reserve(r * r);
  for (const auto& row : a) flat.insert(flat.end(), row.begin(), row.end());
  return std::shared_ptr<const CartanData>(new CartanData(std::move(flat), r, std::move(label)));
}

std::vector<std::vector<int>> CartanData::matrix() const {
  std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_));
  for (int i = 1; i <= rank_; ++i)
    for (int j = 1; j <= rank_; ++j) m[i - 1][j - 1] = cartan(i, j);
  return m;
}

void CartanData::check_index(int i) const {
  if (i < 1 || i > rank_)
    throw InvalidInput("simple index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(rank_));
}

Weight simple_root_as_weight(const CartanData& data, int i) {
  data.check_index(i);
  // coordinate k is (alpha_i, coroot_k) = cartan(k, i)
  std::vector<long> c(data.rank());
  for (int k = 1; k <= data.rank(); ++k) c[k - 1] = data.cartan(k, i);
  return Weight(std::move(c));
}

Weight fundamental_weight(const CartanData& data, int i) {
  data.check_index(i);
  std::vector<long> c(data.rank(), 0);
  c[i - 1] = 1;
  return Weight(std::move(c));
}

RootVector simple_root(const CartanData& data, int i) {
  data.check_index(i);
  std::vector<long> c(data.rank(), 0);
  c[i - 1] = 1;
  return RootVector(std::move(c));
}

Weight root_as_weight(const CartanData& data, const RootVector& root) {
  if (static_cast<int>(root.coords.size()) != data.rank())
    throw InvalidInput("root rank mismatch");
  Weight w(std::vector<long>(data.rank(), 0));
  for (int i = 1; i <= data.rank(); ++i)
    if (root.coords[i - 1] != 0) w = w + simple_root_as_weight(data, i) * root.coords[i - 1];
  return w;
}

Weight reflect_weight(const CartanData& data, int i, const Weight& lambda) {
  data.check_index(i);
  if (lambda.rank() != data.rank()) throw InvalidInput("weight rank mismatch");
  return lambda - simple_root_as_weight(data, i) * lambda.pairing(i);
}

long root_pairing(const CartanData& data, const RootVector& beta, int i) {
  data.check_index(i);
  long s = 0;
  for (int j = 1; j <= data.rank(); ++j) s += beta.coords[j - 1] * data.cartan(i, j);
  return s;
}

RootVector reflect_root(const CartanData& data, int i, const RootVector& beta) {
  if (static_cast<int>(beta.coords.size()) != data.rank())
    throw InvalidInput("root rank mismatch");
  RootVector r = beta;
  r.coords[i - 1] -= root_pairing(data, beta, i);
  return r;
}

Weight r_alpha(const CartanData& data, int i, const Weight& x) {
  data.check_index(i);
  if (x.rank() != data.rank()) throw InvalidInput("weight rank mismatch");
  return x - fundamental_weight(data, i) * x.pairing(i);
}

}  // namespace dbs
