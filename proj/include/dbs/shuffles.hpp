#pragma once

// Shuffled subexpressions of a pair of words (u, v).
//
// A shuffle is encoded by its sign sequence eps: eps[j] = -1 marks a slot
// carrying the next letter of u, +1 the next letter of v.  Positions are
// 1-based in every index set (J, I, K, ...) and 0-based in per-position
// vectors.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dbs/weylgroup.hpp"

namespace dbs {

class ShuffleSetup {
 public:
  ShuffleSetup(CartanPtr data, std::vector<int> u_word, std::vector<int> v_word,
               std::vector<int> eps);

  const CartanPtr& data() const { return data_; }
  const std::vector<int>& u_word() const { return u_; }
  const std::vector<int>& v_word() const { return v_; }
  const std::vector<int>& eps() const { return eps_; }
  int eps(int j) const { return eps_[j - 1]; }  // 1-based
  int n() const { return static_cast<int>(eps_.size()); }
  int l() const { return static_cast<int>(u_.size()); }

  /// (delta_1, ..., delta_n) as simple indices.
  const std::vector<int>& sigma_word() const { return delta_; }
  /// Simple index of delta_j (1-based j).
  int delta(int j) const { return delta_[j - 1]; }

  /// u = s_1 * ... * s_l and v = s_{l+1} * ... * s_n (Demazure products).
  WeylElement u_demazure() const;
  WeylElement v_demazure() const;
  /// v^{-1} * u; the Bruhat bound for gamma^n.
  WeylElement bound() const;

 private:
  CartanPtr data_;
  std::vector<int> u_, v_, eps_, delta_;
};

using SetupPtr = std::shared_ptr<const ShuffleSetup>;

SetupPtr make_setup(CartanPtr data, std::vector<int> u_word, std::vector<int> v_word,
                    std::vector<int> eps);

/// (delta_1..delta_n) for the shuffle.
std::vector<int> sigma_word(const ShuffleSetup& setup);

class Subexpression {
 public:
  /// mask[j-1] is true iff gamma_j = delta_j (otherwise gamma_j = e).
  Subexpression(SetupPtr setup, std::vector<bool> mask);
  static Subexpression from_bits(SetupPtr setup, std::uint64_t bits);
  /// "0101..." with character j-1 for position j.
  static Subexpression from_string(SetupPtr setup, const std::string& bits);
  static Subexpression full(SetupPtr setup);
  static Subexpression empty(SetupPtr setup);

  const ShuffleSetup& setup() const { return *setup_; }
  const SetupPtr& setup_ptr() const { return setup_; }
  const std::vector<bool>& mask() const { return mask_; }
  bool in_mask(int j) const { return mask_[j - 1]; }
  int n() const { return static_cast<int>(mask_.size()); }

  /// gamma_j as a Weyl group element.
  WeylElement factor(int j) const;

  std::string to_string() const;
  std::uint64_t bits() const;

  friend bool operator==(const Subexpression& a, const Subexpression& b) {
    return a.mask_ == b.mask_;
  }

 private:
  SetupPtr setup_;
  std::vector<bool> mask_;
};

/// (gamma^1, ..., gamma^n): gamma^j = gamma^{j-1} gamma_j if eps_j = -1,
/// gamma_j gamma^{j-1} if eps_j = +1.
std::vector<WeylElement> gamma_powers(const Subexpression& g);

/// One-sided products gamma_u^j, gamma_v^j (increasing index), j = 1..n.
struct SidedPowers {
  std::vector<WeylElement> u;
  std::vector<WeylElement> v;
};
SidedPowers sided_powers(const Subexpression& g);

/// Inverse of gamma_powers: recovers the unique mask from (w_1..w_n).
/// Throws InvalidInput when the sequence does not satisfy the step rule.
Subexpression from_powers(SetupPtr setup, const std::vector<WeylElement>& powers);

struct CellProfile {
  std::vector<int> J, I, K;  // 1-based positions
  int dim = 0;               // n - |J|
  bool is_positive = false;
  bool is_distinguished = false;
  WeylElement w;                    // gamma^n
  std::vector<WeylElement> gammas;  // gamma^1..gamma^n
  std::vector<Weight> nu;           // torus weight of each coordinate z_j
};

std::vector<int> j_set(const Subexpression& g);
std::vector<int> i_set(const Subexpression& g);
CellProfile profile(const Subexpression& g);

bool is_positive(const Subexpression& g);
bool is_distinguished(const Subexpression& g);

/// Unique positive gamma with gamma^n = w.  Requires w <= v^{-1} * u.
Subexpression positive_from_w(SetupPtr setup, const WeylElement& w);

enum class FilterKind { All, Positive, Distinguished, FixedW };

struct Filter {
  FilterKind kind = FilterKind::All;
  std::optional<WeylElement> w;  // for FixedW

  static Filter all() { return {}; }
  static Filter positive() { return {FilterKind::Positive, std::nullopt}; }
  static Filter distinguished() { return {FilterKind::Distinguished, std::nullopt}; }
  static Filter fixed_w(WeylElement w) { return {FilterKind::FixedW, std::move(w)}; }
};

constexpr int kDefaultEnumerationBound = 20;

/// Streams the 2^n masks in ascending order of their bit value (bit j-1 for
/// position j), keeping those accepted by the filter.
void enumerate(SetupPtr setup, const Filter& filter,
               const std::function<void(const Subexpression&)>& sink,
               int max_n = kDefaultEnumerationBound);

std::vector<Subexpression> enumerate_all(SetupPtr setup, const Filter& filter,
                                         int max_n = kDefaultEnumerationBound);

/// Translation to the double-subexpression language for reduced (u, v).
/// The three index sets are computed from the Bruhat steps of the sequence
/// w_(k) = (gamma^k)^{-1}; for distinguished gamma they coincide with
/// [1,n] \ I, J and I \ J.
struct WyRecord {
  std::vector<int> J0, Jplus, Jminus;
  std::vector<WeylElement> w_sequence;  // w_(1)..w_(n)
  bool double_distinguished = false;
  bool positive = false;  // double distinguished with Jminus empty
};

WyRecord wy_convert(const Subexpression& g);

bool is_reduced_word(CartanPtr data, const std::vector<int>& word);

}  // namespace dbs
