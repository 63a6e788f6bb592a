#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "dbs/weylgroup.hpp"

namespace oracle {

// Permutations of {1..m}: p[c-1] = w(c).
using Perm = std::vector<int>;

inline Perm identity(int m) {
  Perm p(m);
  for (int c = 0; c < m; ++c) p[c] = c + 1;
  return p;
}

// (a b)(c) = a(b(c))
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t c = 0; c < b.size(); ++c) out[c] = a[b[c] - 1];
  return out;
}

inline Perm transposition(int m, int i) {
  Perm p = identity(m);
  std::swap(p[i - 1], p[i]);
  return p;
}

inline Perm from_word(int m, const std::vector<int>& word) {
  Perm p = identity(m);
  for (int i : word) p = compose(p, transposition(m, i));
  return p;
}

inline int inversions(const Perm& p) {
  int n = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) n += p[a] > p[b];
  return n;
}

// Tableau criterion.
inline bool bruhat_leq(const Perm& v, const Perm& w) {
  for (std::size_t i = 1; i <= v.size(); ++i) {
    std::vector<int> a(v.begin(), v.begin() + i), b(w.begin(), w.begin() + i);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < i; ++k)
      if (a[k] > b[k]) return false;
  }
  return true;
}

// s * w = max(s w, w)
inline Perm star_left(int i, const Perm& w) {
  Perm sw = compose(transposition(static_cast<int>(w.size()), i), w);
  return inversions(sw) > inversions(w) ? sw : w;
}

inline Perm demazure(int m, const std::vector<int>& word) {
  Perm p = identity(m);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = star_left(*it, p);
  return p;
}

// u |> w = s_1 |> (s_2 |> (... |> w)), s |> w = min(s w, w)
inline Perm tri_left(const std::vector<int>& u_word, Perm w) {
  for (auto it = u_word.rbegin(); it != u_word.rend(); ++it) {
    Perm sw = compose(transposition(static_cast<int>(w.size()), *it), w);
    if (inversions(sw) < inversions(w)) w = sw;
  }
  return w;
}

// w <| u = ((w <| s_1) <| s_2) ..., w <| s = min(w s, w)
inline Perm tri_right(Perm w, const std::vector<int>& u_word) {
  for (int i : u_word) {
    Perm ws = compose(w, transposition(static_cast<int>(w.size()), i));
    if (inversions(ws) < inversions(w)) w = ws;
  }
  return w;
}

inline std::vector<Perm> all_perms(int m) {
  Perm p = identity(m);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// |[e, w]| from the subword property: every product of a subword of one
// reduced word of w.
inline std::size_t subword_interval_size(const dbs::WeylElement& w) {
  auto word = dbs::reduced_word(w);
  const int k = static_cast<int>(word.size());
  std::set<std::vector<long>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> sub;
    for (int b = 0; b < k; ++b)
      if ((mask >> b) & 1u) sub.push_back(word[b]);
    auto x = dbs::WeylElement::from_word(w.data(), sub);
    std::vector<long> key;
    for (int r = 1; r <= x.rank(); ++r)
      for (int c = 1; c <= x.rank(); ++c) key.push_back(x.root_entry(r, c));
    seen.insert(key);
  }
  return seen.size();
}

}  // namespace oracle
