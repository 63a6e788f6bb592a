#include "dbs/weylgroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace dbs {

namespace {

std::vector<long> identity_matrix(int r) {
  std::vector<long> m(r * r, 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

std::vector<long> matmul(const std::vector<long>& a, const std::vector<long>& b, int r) {
  std::vector<long> c(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      long aik = a[i * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += aik * b[k * r + j];
    }
  return c;
}

std::vector<long> matvec(const std::vector<long>& a, const std::vector<long>& v, int r) {
  std::vector<long> out(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i] += a[i * r + j] * v[j];
  return out;
}

void require_same_group(const WeylElement& a, const WeylElement& b) {
  if (!a.data() || !b.data()) throw InvalidInput("uninitialised Weyl group element");
  if (a.data() != b.data() && !(*a.data() == *b.data()))
    throw InvalidInput("Weyl group elements belong to different root data");
}

}  // namespace

WeylElement WeylElement::identity(CartanPtr data) {
  if (!data) throw InvalidInput("null Cartan data");
  WeylElement w;
  w.rank_ = data->rank();
  w.data_ = std::move(data);
  w.root_ = identity_matrix(w.rank_);
  w.root_inv_ = w.root_;
  w.weight_ = w.root_;
  w.weight_inv_ = w.root_;
  return w;
}

WeylElement WeylElement::simple(CartanPtr data, int i) {
  WeylElement w = identity(data);
  data->check_index(i);
  const int r = w.rank_;
  // s_i alpha_j = alpha_j - cartan(i, j) alpha_i
  for (int j = 1; j <= r; ++j) w.root_[(i - 1) * r + (j - 1)] -= data->cartan(i, j);
  w.root_inv_ = w.root_;
  // s_i lambda = lambda - lambda_i alpha_i; column i of the weight matrix
  // receives -alpha_i in weight coordinates.
  for (int k = 1; k <= r; ++k) w.weight_[(k - 1) * r + (i - 1)] -= data->cartan(k, i);
  w.weight_inv_ = w.weight_;
  return w;
}

WeylElement WeylElement::from_word(CartanPtr data, const std::vector<int>& word) {
  WeylElement w = identity(data);
  for (int i : word) w = mul(w, simple(data, i));
  return w;
}

bool WeylElement::is_identity() const { return root_ == identity_matrix(rank_); }

RootVector WeylElement::act(const RootVector& beta) const {
  if (static_cast<int>(beta.coords.size()) != rank_) throw InvalidInput("root rank mismatch");
  return RootVector(matvec(root_, beta.coords, rank_));
}

Weight WeylElement::act(const Weight& lambda) const {
  if (lambda.rank() != rank_) throw InvalidInput("weight rank mismatch");
  return Weight(matvec(weight_, lambda.coords, rank_));
}

RootVector WeylElement::act_simple(int i) const {
  data_->check_index(i);
  std::vector<long> c(rank_);
  for (int row = 0; row < rank_; ++row) c[row] = root_[row * rank_ + (i - 1)];
  return RootVector(std::move(c));
}

bool WeylElement::is_right_descent(int i) const { return act_simple(i).is_negative(); }

bool WeylElement::is_left_descent(int i) const {
  data_->check_index(i);
  std::vector<long> c(rank_);
  for (int row = 0; row < rank_; ++row) c[row] = root_inv_[row * rank_ + (i - 1)];
  return RootVector(std::move(c)).is_negative();
}

std::size_t WeylElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (long v : root_) {
    h ^= static_cast<std::size_t>(v + 0x9e3779b9);
    h *= 1099511628211ull;
  }
  return h;
}

WeylElement simple(CartanPtr data, int i) { return WeylElement::simple(std::move(data), i); }

WeylElement mul(const WeylElement& a, const WeylElement& b) {
  require_same_group(a, b);
  WeylElement c;
  c.data_ = a.data_;
  c.rank_ = a.rank_;
  c.root_ = matmul(a.root_, b.root_, a.rank_);
  c.root_inv_ = matmul(b.root_inv_, a.root_inv_, a.rank_);
  c.weight_ = matmul(a.weight_, b.weight_, a.rank_);
  c.weight_inv_ = matmul(b.weight_inv_, a.weight_inv_, a.rank_);
  return c;
}

WeylElement inv(const WeylElement& a) {
  WeylElement c = a;
  std::swap(c.root_, c.root_inv_);
  std::swap(c.weight_, c.weight_inv_);
  return c;
}

int length(const WeylElement& w) {
  int count = 0;
  for (const auto& beta : w.data()->positive_roots())
    if (w.act(beta).is_negative()) ++count;
  return count;
}

std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  const int r = w.rank();
  while (true) {
    int found = 0;
    for (int i = 1; i <= r; ++i)
      if (cur.is_left_descent(i)) {
        found = i;
        break;
      }
    if (!found) break;
    word.push_back(found);
    cur = mul(simple(w.data(), found), cur);
  }
  return word;
}

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  require_same_group(v, w);
  WeylElement x = v, y = w;
  const int r = w.rank();
  while (true) {
    int s = 0;
    for (int i = 1; i <= r; ++i)
      if (y.is_left_descent(i)) {
        s = i;
        break;
      }
    if (!s) return x.is_identity();
    WeylElement si = simple(w.data(), s);
    if (x.is_left_descent(s)) x = mul(si, x);
    y = mul(si, y);
  }
}

bool bruhat_less(const WeylElement& v, const WeylElement& w) { return !(v == w) && bruhat_leq(v, w); }

WeylElement demazure_star_word(const std::vector<int>& u_word, const WeylElement& w) {
  WeylElement cur = w;
  for (auto it = u_word.rbegin(); it != u_word.rend(); ++it)
    if (!cur.is_left_descent(*it)) cur = mul(simple(w.data(), *it), cur);
  return cur;
}

WeylElement tri_left_word(const std::vector<int>& u_word, const WeylElement& w) {
  WeylElement cur = w;
  for (auto it = u_word.rbegin(); it != u_word.rend(); ++it)
    if (cur.is_left_descent(*it)) cur = mul(simple(w.data(), *it), cur);
  return cur;
}

WeylElement tri_right_word(const WeylElement& w, const std::vector<int>& u_word) {
  WeylElement cur = w;
  for (int s : u_word)
    if (cur.is_right_descent(s)) cur = mul(cur, simple(w.data(), s));
  return cur;
}

WeylElement demazure_star(const WeylElement& u, const WeylElement& w) {
  require_same_group(u, w);
  return demazure_star_word(reduced_word(u), w);
}

WeylElement tri_left(const WeylElement& u, const WeylElement& w) {
  require_same_group(u, w);
  return tri_left_word(reduced_word(u), w);
}

WeylElement tri_right(const WeylElement& w, const WeylElement& u) {
  require_same_group(u, w);
  return tri_right_word(w, reduced_word(u));
}

WeylElement demazure_of_word(CartanPtr data, const std::vector<int>& word) {
  // s_1 * (s_2 * (... * s_k)), right to left from the identity.
  return demazure_star_word(word, WeylElement::identity(std::move(data)));
}

namespace {

void sort_by_length(std::vector<WeylElement>& v) {
  std::vector<std::pair<std::pair<int, std::vector<int>>, std::size_t>> keys;
  keys.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    keys.push_back({{length(v[i]), reduced_word(v[i])}, i});
  std::sort(keys.begin(), keys.end());
  std::vector<WeylElement> out;
  out.reserve(v.size());
  for (auto& k : keys) out.push_back(v[k.second]);
  v = std::move(out);
}

}  // namespace

std::vector<WeylElement> bruhat_interval_below(const WeylElement& w, std::size_t limit) {
  // [e, w] = [e, s w] u s[e, s w] for a left descent s of w.
  std::vector<int> word = reduced_word(w);
  std::unordered_set<WeylElement, WeylHash> set{WeylElement::identity(w.data())};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    WeylElement s = simple(w.data(), *it);
    std::vector<WeylElement> add;
    for (const auto& x : set) add.push_back(mul(s, x));
    for (auto& x : add) {
      set.insert(std::move(x));
      if (set.size() > limit)
        throw LimitExceeded("Bruhat interval exceeds limit of " + std::to_string(limit));
    }
  }
  std::vector<WeylElement> out(set.begin(), set.end());
  sort_by_length(out);
  return out;
}

std::vector<WeylElement> all_elements(CartanPtr data, std::size_t limit) {
  std::vector<int> longest;
  for (int pass = 0; pass < static_cast<int>(data->positive_roots().size()); ++pass)
    for (int i = 1; i <= data->rank(); ++i) longest.push_back(i);
  WeylElement w0 = demazure_of_word(data, longest);
  return bruhat_interval_below(w0, limit);
}

std::vector<int> to_permutation(const WeylElement& w) {
  if (!w.data()->is_type_a()) throw InvalidInput("permutation model requires type A");
  const int m = w.rank() + 1;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  // w = s_{i1} ... s_{ik}; apply right to left to each point.
  std::vector<int> word = reduced_word(w);
  for (int c = 0; c < m; ++c) {
    int x = c + 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (x == *it) x = *it + 1;
      else if (x == *it + 1) x = *it;
    }
    perm[c] = x;
  }
  return perm;
}

WeylElement from_permutation(CartanPtr data, const std::vector<int>& perm) {
  if (!data->is_type_a()) throw InvalidInput("permutation model requires type A");
  const int m = data->rank() + 1;
  if (static_cast<int>(perm.size()) != m) throw InvalidInput("permutation size mismatch");
  std::vector<int> p = perm;
  std::vector<int> check = p;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < m; ++i)
    if (check[i] != i + 1) throw InvalidInput("not a permutation");
  // Right-multiply by s_i at descents until sorted; w = reverse of the recorded word.
  std::vector<int> recorded;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < m; ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        recorded.push_back(i + 1);
        changed = true;
      }
  }
  std::reverse(recorded.begin(), recorded.end());
  return WeylElement::from_word(std::move(data), recorded);
}

}  // namespace dbs
