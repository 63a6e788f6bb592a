#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dbs/rootdata.hpp"

namespace dbs {

/// An element of the Weyl group, stored as its integer action on the
/// simple-root basis (column i is the image of alpha_i).  The inverse action
/// and the action on the fundamental-weight basis are carried alongside so
/// that descents and weight pairings are single matrix-vector products.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(CartanPtr data);
  static WeylElement simple(CartanPtr data, int i);
  /// Product s_{w[0]} s_{w[1]} ... of simple reflections (any word).
  static WeylElement from_word(CartanPtr data, const std::vector<int>& word);

  const CartanPtr& data() const { return data_; }
  int rank() const { return rank_; }
  bool is_identity() const;

  RootVector act(const RootVector& beta) const;
  Weight act(const Weight& lambda) const;
  /// w alpha_i
  RootVector act_simple(int i) const;

  /// Root-lattice action matrix entry (row, col), 1-based.
  long root_entry(int row, int col) const { return root_[(row - 1) * rank_ + (col - 1)]; }

  bool is_left_descent(int i) const;   // s_i w < w
  bool is_right_descent(int i) const;  // w s_i < w

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rank_ == b.rank_ && a.root_ == b.root_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.root_ < b.root_; }

  std::size_t hash() const;

  friend WeylElement mul(const WeylElement& a, const WeylElement& b);
  friend WeylElement inv(const WeylElement& a);

 private:
  CartanPtr data_;
  int rank_ = 0;
  std::vector<long> root_;      // action on simple-root basis
  std::vector<long> root_inv_;  // inverse action on simple-root basis
  std::vector<long> weight_;    // action on fundamental-weight basis
  std::vector<long> weight_inv_;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

WeylElement simple(CartanPtr data, int i);
WeylElement mul(const WeylElement& a, const WeylElement& b);
WeylElement inv(const WeylElement& a);

/// Number of positive roots sent to negative roots.
int length(const WeylElement& w);

/// Canonical reduced word: repeatedly strip the smallest left descent.
std::vector<int> reduced_word(const WeylElement& w);

/// Bruhat order via descent recursion.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);
bool bruhat_less(const WeylElement& v, const WeylElement& w);

/// Demazure product u * w.
WeylElement demazure_star(const WeylElement& u, const WeylElement& w);
/// u |> w  (left action, "min" counterpart of *).
WeylElement tri_left(const WeylElement& u, const WeylElement& w);
/// w <| u  (right action).
WeylElement tri_right(const WeylElement& w, const WeylElement& u);

/// Same operations driven by an explicit word for u; used to check that the
/// result does not depend on the chosen reduced expression.
WeylElement demazure_star_word(const std::vector<int>& u_word, const WeylElement& w);
WeylElement tri_left_word(const std::vector<int>& u_word, const WeylElement& w);
WeylElement tri_right_word(const WeylElement& w, const std::vector<int>& u_word);

/// Demazure product of a word s_1 * s_2 * ... * s_k.
WeylElement demazure_of_word(CartanPtr data, const std::vector<int>& word);

/// {v : v <= w}, sorted by (length, reduced word).  Throws LimitExceeded when
/// the interval has more than `limit` elements.
std::vector<WeylElement> bruhat_interval_below(const WeylElement& w, std::size_t limit = 1'000'000);

/// All elements of the group (w <= w0).  Guarded by the same limit.
std::vector<WeylElement> all_elements(CartanPtr data, std::size_t limit = 1'000'000);

/// Type A only: w as a permutation of {1..r+1} (entry c-1 holds w(c)).
std::vector<int> to_permutation(const WeylElement& w);
WeylElement from_permutation(CartanPtr data, const std::vector<int>& perm);

}  // namespace dbs
