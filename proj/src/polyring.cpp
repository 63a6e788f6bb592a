#include "dbs/polyring.hpp"

#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace dbs {

namespace {

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void require_same(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars())
    throw InvalidInput("polynomial variable count mismatch (" + std::to_string(a.nvars()) +
                       " vs " + std::to_string(b.nvars()) + ")");
}

}  // namespace

bool TermOrder::operator()(const Exponent& a, const Exponent& b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t v = a.size(); v-- > 0;)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw InvalidInput("variable index out of range");
  Exponent e(nvars, 0);
  e[i - 1] = 1;
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponent& e, const Rational& c) {
  for (int x : e)
    if (x < 0) throw InvalidInput("negative exponent");
  MPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw InvalidInput("exponent length mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0);
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw InvalidInput("polynomial is not constant: " + to_string(*this));
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : degree(terms_.begin()->first); }

int MPoly::degree_in(int var) const {
  if (var < 1 || var > nvars_) throw InvalidInput("variable index out of range");
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var - 1]);
  return d;
}

MPoly MPoly::coefficient(int var, int d) const {
  if (var < 1 || var > nvars_) throw InvalidInput("variable index out of range");
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[var - 1] == d) {
      Exponent f = e;
      f[var - 1] = 0;
      out.add_term(f, c);
    }
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same(a, b);
  MPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, x] : r.terms_) x = -x;
  return r;
}

MPoly pow(const MPoly& p, int e) {
  if (e < 0) throw InvalidInput("negative polynomial power");
  MPoly r = MPoly::constant(p.nvars(), 1), b = p;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Rational eval(const MPoly& p, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw InvalidInput("evaluation point has " + std::to_string(point.size()) +
                       " coordinates, polynomial has " + std::to_string(p.nvars()) + " variables");
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (int v = 0; v < p.nvars() && t != 0; ++v)
      if (e[v]) t *= pow(point[v], e[v]);
    s += t;
  }
  return s;
}

MPoly subst(const MPoly& p, const std::vector<std::optional<MPoly>>& assignments) {
  if (static_cast<int>(assignments.size()) != p.nvars())
    throw InvalidInput("substitution length mismatch");
  for (const auto& a : assignments)
    if (a && a->nvars() != p.nvars()) throw InvalidInput("substitution variable count mismatch");
  MPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent kept = e;
    MPoly factor = MPoly::constant(p.nvars(), c);
    for (int v = 0; v < p.nvars(); ++v)
      if (assignments[v] && e[v]) {
        factor *= pow(*assignments[v], e[v]);
        kept[v] = 0;
      }
    out += factor * MPoly::monomial(kept, 1);
  }
  return out;
}

MPoly subst_values(const MPoly& p, const std::map<int, Rational>& values) {
  std::vector<std::optional<MPoly>> a(p.nvars());
  for (const auto& [v, x] : values) {
    if (v < 1 || v > p.nvars()) throw InvalidInput("variable index out of range");
    a[v - 1] = MPoly::constant(p.nvars(), x);
  }
  return subst(p, a);
}

std::pair<MPoly, MPoly> split_linear(const MPoly& p, int var) {
  if (p.degree_in(var) > 1)
    throw InvalidInput("polynomial is not affine in z" + std::to_string(var));
  return {p.coefficient(var, 0), p.coefficient(var, 1)};
}

MPoly exact_div(const MPoly& p, const MPoly& d) {
  require_same(p, d);
  if (d.is_zero()) throw InvalidInput("division by the zero polynomial");
  const auto& [ld, lc] = *d.terms().begin();
  MPoly q(p.nvars()), r = p;
  while (!r.is_zero()) {
    const auto [lr, rc] = *r.terms().begin();
    Exponent t(p.nvars());
    for (int v = 0; v < p.nvars(); ++v) {
      t[v] = lr[v] - ld[v];
      if (t[v] < 0) throw Error("exact division failed: divisor does not divide dividend");
    }
    MPoly term = MPoly::monomial(t, rc / lc);
    q += term;
    r -= term * d;
  }
  return q;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int v = 0; v < p.nvars(); ++v) {
      if (!e[v]) continue;
      if (!mono.empty()) mono += '*';
      mono += 'z' + std::to_string(v + 1);
      if (e[v] > 1) mono += '^' + std::to_string(e[v]);
    }
    if (mono.empty()) os << to_string(a);
    else if (a == 1) os << mono;
    else os << to_string(a) << '*' << mono;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, int nvars) : s_(s), nvars_(nvars) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                       " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  MPoly expr() {
    MPoly p = term();
    while (true) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  MPoly term() {
    MPoly p = factor();
    while (eat('*')) p *= factor();
    return p;
  }
  MPoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    MPoly base = primary();
    if (eat('^')) base = pow(base, std::stoi(digits()));
    return base;
  }
  MPoly primary() {
    skip();
    if (eat('(')) {
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && s_[pos_] == 'z') {
      ++pos_;
      int v = std::stoi(digits());
      if (v < 1 || v > nvars_) fail("variable z" + std::to_string(v) + " out of range");
      return MPoly::variable(nvars_, v);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits();
      if (eat('/')) num += "/" + digits();
      return MPoly::constant(nvars_, parse_rational(num));
    }
    fail("expected a variable, number or '('");
  }

  std::string_view s_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, int nvars) { return Parser(text, nvars).parse(); }

PolyMatrix poly_identity(int k, int nvars) {
  return PolyMatrix::identity(k, MPoly(nvars), MPoly::constant(nvars, 1));
}

PolyMatrix lift(const QMatrix& m, int nvars) {
  return m.map([nvars](const Rational& q) { return MPoly::constant(nvars, q); });
}

QMatrix eval(const PolyMatrix& m, const std::vector<Rational>& point) {
  return m.map([&point](const MPoly& p) { return eval(p, point); });
}

MPoly det_cofactor(const PolyMatrix& m) {
  if (!m.square()) throw InvalidInput("determinant of a non-square matrix");
  const int k = m.rows();
  if (k == 0) return MPoly::constant(0, 1);
  const int nv = m(0, 0).nvars();
  if (k > 20) throw LimitExceeded("cofactor expansion limited to 20x20");
  // minor over the last (k - popcount(used)) rows and unused columns
  std::unordered_map<unsigned, MPoly> memo;
  std::function<MPoly(unsigned)> rec = [&](unsigned used) -> MPoly {
    const int row = __builtin_popcount(used);
    if (row == k) return MPoly::constant(nv, 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    MPoly acc(nv);
    int sign_pos = 0;
    for (int c = 0; c < k; ++c) {
      if (used & (1u << c)) continue;
      if (!m(row, c).is_zero()) {
        MPoly t = m(row, c) * rec(used | (1u << c));
        if (sign_pos % 2) acc -= t;
        else acc += t;
      }
      ++sign_pos;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0);
}

MPoly det_bareiss(const PolyMatrix& m) {
  if (!m.square()) throw InvalidInput("determinant of a non-square matrix");
  const int k = m.rows();
  if (k == 0) return MPoly::constant(0, 1);
  const int nv = m(0, 0).nvars();
  PolyMatrix a = m;
  MPoly prev = MPoly::constant(nv, 1);
  bool negate = false;
  for (int c = 0; c < k - 1; ++c) {
    if (a(c, c).is_zero()) {
      int piv = -1;
      for (int r = c + 1; r < k; ++r)
        if (!a(r, c).is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return MPoly(nv);
      for (int j = 0; j < k; ++j) std::swap(a(piv, j), a(c, j));
      negate = !negate;
    }
    for (int i = c + 1; i < k; ++i)
      for (int j = c + 1; j < k; ++j)
        a(i, j) = exact_div(a(c, c) * a(i, j) - a(i, c) * a(c, j), prev);
    prev = a(c, c);
  }
  MPoly d = a(k - 1, k - 1);
  return negate ? -d : d;
}

MPoly det(const PolyMatrix& m) { return m.rows() <= 6 ? det_cofactor(m) : det_bareiss(m); }

}  // namespace dbs
