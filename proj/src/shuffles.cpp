#include "dbs/shuffles.hpp"

#include <algorithm>

namespace dbs {

ShuffleSetup::ShuffleSetup(CartanPtr data, std::vector<int> u_word, std::vector<int> v_word,
                           std::vector<int> eps)
    : data_(std::move(data)), u_(std::move(u_word)), v_(std::move(v_word)), eps_(std::move(eps)) {
  if (!data_) throw InvalidInput("null Cartan data");
  for (int i : u_) data_->check_index(i);
  for (int i : v_) data_->check_index(i);
  if (eps_.size() != u_.size() + v_.size())
    throw InvalidInput("eps has length " + std::to_string(eps_.size()) + " but u and v have " +
                       std::to_string(u_.size() + v_.size()) + " letters in total");
  std::size_t nu = 0, nv = 0;
  delta_.reserve(eps_.size());
  for (int e : eps_) {
    if (e == -1) {
      if (nu >= u_.size()) throw InvalidInput("eps has more -1 entries than letters in u");
      delta_.push_back(u_[nu++]);
    } else if (e == 1) {
      if (nv >= v_.size()) throw InvalidInput("eps has more +1 entries than letters in v");
      delta_.push_back(v_[nv++]);
    } else {
      throw InvalidInput("eps entries must be -1 or +1");
    }
  }
}

WeylElement ShuffleSetup::u_demazure() const { return demazure_of_word(data_, u_); }
WeylElement ShuffleSetup::v_demazure() const { return demazure_of_word(data_, v_); }

WeylElement ShuffleSetup::bound() const {
  return demazure_star(inv(v_demazure()), u_demazure());
}

SetupPtr make_setup(CartanPtr data, std::vector<int> u_word, std::vector<int> v_word,
                    std::vector<int> eps) {
  return std::make_shared<const ShuffleSetup>(std::move(data), std::move(u_word),
                                              std::move(v_word), std::move(eps));
}

std::vector<int> sigma_word(const ShuffleSetup& setup) { return setup.sigma_word(); }

Subexpression::Subexpression(SetupPtr setup, std::vector<bool> mask)
    : setup_(std::move(setup)), mask_(std::move(mask)) {
  if (!setup_) throw InvalidInput("null shuffle setup");
  if (static_cast<int>(mask_.size()) != setup_->n())
    throw InvalidInput("mask length " + std::to_string(mask_.size()) + " differs from n = " +
                       std::to_string(setup_->n()));
}

Subexpression Subexpression::from_bits(SetupPtr setup, std::uint64_t bits) {
  const int n = setup->n();
  if (n < 64 && (bits >> n) != 0) throw InvalidInput("mask has bits beyond position n");
  std::vector<bool> m(n);
  for (int j = 0; j < n; ++j) m[j] = (bits >> j) & 1u;
  return Subexpression(std::move(setup), std::move(m));
}

Subexpression Subexpression::from_string(SetupPtr setup, const std::string& bits) {
  std::vector<bool> m;
  m.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidInput("mask string must consist of 0 and 1");
    m.push_back(c == '1');
  }
  return Subexpression(std::move(setup), std::move(m));
}

Subexpression Subexpression::full(SetupPtr setup) {
  std::vector<bool> m(setup->n(), true);
  return Subexpression(std::move(setup), std::move(m));
}

Subexpression Subexpression::empty(SetupPtr setup) {
  std::vector<bool> m(setup->n(), false);
  return Subexpression(std::move(setup), std::move(m));
}

WeylElement Subexpression::factor(int j) const {
  if (j < 1 || j > n()) throw InvalidInput("position out of range");
  if (mask_[j - 1]) return simple(setup_->data(), setup_->delta(j));
  return WeylElement::identity(setup_->data());
}

std::string Subexpression::to_string() const {
  std::string s;
  for (bool b : mask_) s.push_back(b ? '1' : '0');
  return s;
}

std::uint64_t Subexpression::bits() const {
  if (n() > 64) throw LimitExceeded("mask does not fit in 64 bits");
  std::uint64_t b = 0;
  for (int j = 0; j < n(); ++j)
    if (mask_[j]) b |= std::uint64_t{1} << j;
  return b;
}

std::vector<WeylElement> gamma_powers(const Subexpression& g) {
  const auto& s = g.setup();
  std::vector<WeylElement> out;
  out.reserve(g.n());
  WeylElement cur = WeylElement::identity(s.data());
  for (int j = 1; j <= g.n(); ++j) {
    if (g.in_mask(j)) {
      WeylElement d = simple(s.data(), s.delta(j));
      cur = s.eps(j) == -1 ? mul(cur, d) : mul(d, cur);
    }
    out.push_back(cur);
  }
  return out;
}

SidedPowers sided_powers(const Subexpression& g) {
  const auto& s = g.setup();
  SidedPowers out;
  WeylElement gu = WeylElement::identity(s.data()), gv = gu;
  for (int j = 1; j <= g.n(); ++j) {
    if (g.in_mask(j)) {
      WeylElement d = simple(s.data(), s.delta(j));
      if (s.eps(j) == -1) gu = mul(gu, d);
      else gv = mul(gv, d);
    }
    out.u.push_back(gu);
    out.v.push_back(gv);
  }
  return out;
}

Subexpression from_powers(SetupPtr setup, const std::vector<WeylElement>& powers) {
  const int n = setup->n();
  if (static_cast<int>(powers.size()) != n) throw InvalidInput("power sequence length mismatch");
  std::vector<bool> m(n);
  WeylElement prev = WeylElement::identity(setup->data());
  for (int j = 1; j <= n; ++j) {
    const WeylElement& cur = powers[j - 1];
    if (cur == prev) {
      m[j - 1] = false;
    } else {
      WeylElement d = simple(setup->data(), setup->delta(j));
      WeylElement step = setup->eps(j) == -1 ? mul(prev, d) : mul(d, prev);
      if (!(step == cur))
        throw InvalidInput("sequence violates the step rule at position " + std::to_string(j));
      m[j - 1] = true;
    }
    prev = cur;
  }
  return Subexpression(std::move(setup), std::move(m));
}

namespace {

// (gamma^j)^{-eps_j} alpha_j < 0
bool in_j(const ShuffleSetup& s, int j, const WeylElement& gj) {
  return s.eps(j) == -1 ? gj.is_right_descent(s.delta(j)) : gj.is_left_descent(s.delta(j));
}

std::vector<int> j_from_powers(const Subexpression& g, const std::vector<WeylElement>& pw) {
  std::vector<int> out;
  for (int j = 1; j <= g.n(); ++j)
    if (in_j(g.setup(), j, pw[j - 1])) out.push_back(j);
  return out;
}

bool positive_from_powers(const Subexpression& g, const std::vector<WeylElement>& pw) {
  const auto& s = g.setup();
  WeylElement prev = WeylElement::identity(s.data());
  for (int j = 1; j <= g.n(); ++j) {
    const WeylElement& cur = pw[j - 1];
    std::vector<int> d{s.delta(j)};
    WeylElement back = s.eps(j) == -1 ? tri_right_word(cur, d) : tri_left_word(d, cur);
    if (!(back == prev)) return false;
    prev = cur;
  }
  return true;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<int> j_set(const Subexpression& g) { return j_from_powers(g, gamma_powers(g)); }

std::vector<int> i_set(const Subexpression& g) {
  std::vector<int> out;
  for (int j = 1; j <= g.n(); ++j)
    if (g.in_mask(j)) out.push_back(j);
  return out;
}

bool is_positive(const Subexpression& g) { return positive_from_powers(g, gamma_powers(g)); }

bool is_distinguished(const Subexpression& g) { return subset(j_set(g), i_set(g)); }

CellProfile profile(const Subexpression& g) {
  const auto& s = g.setup();
  CellProfile p;
  p.gammas = gamma_powers(g);
  p.J = j_from_powers(g, p.gammas);
  p.I = i_set(g);
  std::set_difference(p.I.begin(), p.I.end(), p.J.begin(), p.J.end(), std::back_inserter(p.K));
  p.dim = g.n() - static_cast<int>(p.J.size());
  p.is_positive = positive_from_powers(g, p.gammas);
  p.is_distinguished = subset(p.J, p.I);
  p.w = p.gammas.empty() ? WeylElement::identity(s.data()) : p.gammas.back();
  SidedPowers sp = sided_powers(g);
  for (int j = 1; j <= g.n(); ++j) {
    RootVector a = simple_root(*s.data(), s.delta(j));
    RootVector img = s.eps(j) == -1 ? -sp.u[j - 1].act(a) : sp.v[j - 1].act(a);
    p.nu.push_back(root_as_weight(*s.data(), img));
  }
  return p;
}

Subexpression positive_from_w(SetupPtr setup, const WeylElement& w) {
  if (!bruhat_leq(w, setup->bound()))
    throw InvalidInput("w is not below v^{-1} * u in the Bruhat order");
  const int n = setup->n();
  std::vector<bool> m(n);
  WeylElement cur = w;
  for (int j = n; j >= 1; --j) {
    std::vector<int> d{setup->delta(j)};
    WeylElement prev = setup->eps(j) == -1 ? tri_right_word(cur, d) : tri_left_word(d, cur);
    m[j - 1] = !(prev == cur);
    cur = prev;
  }
  if (!cur.is_identity()) throw Error("backward recursion did not reach the identity");
  return Subexpression(std::move(setup), std::move(m));
}

namespace {

bool accept(const Filter& f, const Subexpression& g) {
  switch (f.kind) {
    case FilterKind::All: return true;
    case FilterKind::Positive: return is_positive(g);
    case FilterKind::Distinguished: return is_distinguished(g);
    case FilterKind::FixedW: {
      if (!f.w) throw InvalidInput("fixed_w filter without an element");
      auto pw = gamma_powers(g);
      WeylElement last = pw.empty() ? WeylElement::identity(g.setup().data()) : pw.back();
      return last == *f.w;
    }
  }
  return false;
}

}  // namespace

void enumerate(SetupPtr setup, const Filter& filter,
               const std::function<void(const Subexpression&)>& sink, int max_n) {
  const int n = setup->n();
  if (n > max_n || n > 62)
    throw LimitExceeded("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(std::min(max_n, 62)));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < total; ++b) {
    Subexpression g = Subexpression::from_bits(setup, b);
    if (accept(filter, g)) sink(g);
  }
}

std::vector<Subexpression> enumerate_all(SetupPtr setup, const Filter& filter, int max_n) {
  std::vector<Subexpression> out;
  enumerate(std::move(setup), filter, [&](const Subexpression& g) { out.push_back(g); }, max_n);
  return out;
}

bool is_reduced_word(CartanPtr data, const std::vector<int>& word) {
  return length(WeylElement::from_word(data, word)) == static_cast<int>(word.size());
}

WyRecord wy_convert(const Subexpression& g) {
  const auto& s = g.setup();
  if (!is_reduced_word(s.data(), s.u_word()))
    throw InvalidInput("wy_convert requires a reduced word u");
  if (!is_reduced_word(s.data(), s.v_word()))
    throw InvalidInput("wy_convert requires a reduced word v");
  WyRecord r;
  auto pw = gamma_powers(g);
  WeylElement prev = WeylElement::identity(s.data());
  r.double_distinguished = true;
  for (int k = 1; k <= g.n(); ++k) {
    WeylElement cur = inv(pw[k - 1]);
    r.w_sequence.push_back(cur);
    if (cur == prev) r.J0.push_back(k);
    else if (bruhat_less(prev, cur)) r.Jplus.push_back(k);
    else r.Jminus.push_back(k);

    // w_(k)^{eps} = w_(k-1)^{eps} s whenever the right-hand side goes down.
    const int i = s.delta(k);
    WeylElement x = s.eps(k) == 1 ? prev : inv(prev);
    if (x.is_right_descent(i)) {
      WeylElement y = s.eps(k) == 1 ? cur : inv(cur);
      if (!(y == mul(x, simple(s.data(), i)))) r.double_distinguished = false;
    }
    prev = cur;
  }
  r.positive = r.double_distinguished && r.Jminus.empty();
  return r;
}

}  // namespace dbs
