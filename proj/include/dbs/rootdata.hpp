#pragma once

// Finite-type Cartan data.
//
// Conventions used throughout the library:
//   * simple roots are indexed 1..r;
//   * cartan(i, j) = (alpha_j, coroot_i);
//   * weights are integer vectors in the fundamental-weight basis, so
//     (lambda, coroot_k) is simply coordinate k;
//   * roots are integer vectors in the simple-root basis.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dbs/rational.hpp"

namespace dbs {

struct Weight {
  std::vector<long> coords;

  Weight() = default;
  explicit Weight(std::vector<long> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  /// (lambda, coroot_k), k is 1-based.
  long pairing(int k) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(long s) const;
};

struct RootVector {
  std::vector<long> coords;

  RootVector() = default;
  explicit RootVector(std::vector<long> c) : coords(std::move(c)) {}

  bool is_positive() const;  // nonzero with all coordinates >= 0
  bool is_negative() const;
  friend bool operator==(const RootVector&, const RootVector&) = default;
  RootVector operator-() const;
};

std::string to_string(const Weight& w);

class CartanData {
 public:
  /// "A1".."A8", "B2".., "C2"..,"D4".., "E6", "E7", "E8", "F4", "G2".
  static std::shared_ptr<const CartanData> from_type(std::string_view label);
  /// Validated explicit matrix; rejects non-finite types.
  static std::shared_ptr<const CartanData> from_matrix(std::vector<std::vector<int>> a,
                                                       std::string label = "custom");

  int rank() const { return rank_; }
  /// (alpha_j, coroot_i) with 1-based i, j.
  int cartan(int i, int j) const { return a_[(i - 1) * rank_ + (j - 1)]; }
  const std::string& type_label() const { return label_; }
  std::vector<std::vector<int>> matrix() const;

  /// True for A_r with the standard chain labelling (rows/cols 1..r).
  bool is_type_a() const { return type_a_; }

  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }

  void check_index(int i) const;

  friend bool operator==(const CartanData& a, const CartanData& b) { return a.a_ == b.a_; }

 private:
  CartanData(std::vector<int> a, int rank, std::string label);

  int rank_ = 0;
  std::vector<int> a_;
  std::string label_;
  bool type_a_ = false;
  std::vector<RootVector> positive_roots_;
};

using CartanPtr = std::shared_ptr<const CartanData>;

/// alpha_i written in the fundamental-weight basis.
Weight simple_root_as_weight(const CartanData& data, int i);
/// lambda_i.
Weight fundamental_weight(const CartanData& data, int i);
RootVector simple_root(const CartanData& data, int i);

/// Converts a root (simple-root basis) to the fundamental-weight basis.
Weight root_as_weight(const CartanData& data, const RootVector& root);

/// s_i lambda = lambda - (lambda, coroot_i) alpha_i.
Weight reflect_weight(const CartanData& data, int i, const Weight& lambda);
/// s_i beta on the simple-root basis.
RootVector reflect_root(const CartanData& data, int i, const RootVector& beta);
/// r_i x = x - (x, coroot_i) lambda_i.  Not an involution.
Weight r_alpha(const CartanData& data, int i, const Weight& x);

/// (beta, coroot_i) for a root in the simple-root basis.
long root_pairing(const CartanData& data, const RootVector& beta, int i);

}  // namespace dbs
