#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "signdet/dense.hpp"
#include "signdet/sign.hpp"

namespace signdet {

/// A sign per polynomial. Coordinate 0 belongs to the most recently added
/// polynomial and is the most significant one for ordering.
class SignCond {
 public:
  SignCond() = default;
  explicit SignCond(std::vector<Sign> signs) : signs_(std::move(signs)) {}
  /// Convenience for literals: each value must be -1, 0 or 1.
  static SignCond of(std::initializer_list<int> values);

  std::size_t size() const { return signs_.size(); }
  Sign operator[](std::size_t k) const { return signs_[k]; }
  std::span<const Sign> signs() const { return signs_; }

  /// Lexicographic order with 0 < 1 < -1; shorter conditions sort first.
  friend std::strong_ordering operator<=>(const SignCond& a, const SignCond& b);
  friend bool operator==(const SignCond&, const SignCond&) = default;

 private:
  std::vector<Sign> signs_;
};

/// Throws std::invalid_argument on a length mismatch.
std::strong_ordering lex_cmp(const SignCond& a, const SignCond& b);

/// Drops coordinate 0. Throws std::invalid_argument on conditions of length < 2.
SignCond project(const SignCond& s);

/// Prepends `first` as the new coordinate 0.
SignCond extend(Sign first, const SignCond& rest);

std::string to_string(const SignCond& s);

/// Strictly increasing list of sign conditions of a common length.
class SignList {
 public:
  SignList() = default;
  /// Throws std::invalid_argument unless strictly increasing with equal lengths.
  explicit SignList(std::vector<SignCond> conds);
  /// Sorts and removes duplicates.
  static SignList from_unsorted(std::vector<SignCond> conds);

  std::size_t size() const { return conds_.size(); }
  bool empty() const { return conds_.empty(); }
  /// Length of every condition in the list (0 for an empty list).
  std::size_t cond_length() const { return conds_.empty() ? 0 : conds_.front().size(); }
  const SignCond& operator[](std::size_t j) const { return conds_[j]; }
  auto begin() const { return conds_.begin(); }
  auto end() const { return conds_.end(); }
  std::span<const SignCond> conds() const { return conds_; }

  friend bool operator==(const SignList&, const SignList&) = default;

 private:
  std::vector<SignCond> conds_;
};

/// Exponent vector over {0,1,2}, aligned with sign conditions.
class MultiDeg {
 public:
  MultiDeg() = default;
  explicit MultiDeg(std::vector<std::uint8_t> degs);
  static MultiDeg of(std::initializer_list<int> values);

  std::size_t size() const { return degs_.size(); }
  int operator[](std::size_t k) const { return degs_[k]; }
  std::span<const std::uint8_t> degs() const { return degs_; }

  friend auto operator<=>(const MultiDeg&, const MultiDeg&) = default;
  friend bool operator==(const MultiDeg&, const MultiDeg&) = default;

 private:
  std::vector<std::uint8_t> degs_;
};

MultiDeg extend(int first, const MultiDeg& rest);
std::string to_string(const MultiDeg& a);

using AdaList = std::vector<MultiDeg>;

/// sigma^alpha = prod_k sigma[k]^alpha[k], with 0^0 = 1.
int mat_entry(const MultiDeg& alpha, const SignCond& sigma);
/// Entry for the multidegree (first, rest...) without building it.
int mat_entry(int first, const MultiDeg& rest, const SignCond& sigma);

/// The twelve sublists Σ_B^b. Names list B then b, e.g. ZeroNeg_Neg is
/// Σ_{0,-1}^{-1}.
enum class Part : std::uint8_t {
  Zero,
  Pos,
  Neg,
  ZeroPos_Zero,
  ZeroPos_Pos,
  ZeroNeg_Zero,
  ZeroNeg_Neg,
  PosNeg_Pos,
  PosNeg_Neg,
  All_Zero,
  All_Pos,
  All_Neg,
};
inline constexpr std::size_t kNumParts = 12;

/// Group Σ_(1), Σ_(2) or Σ_(3) (returned 0-based) that a part belongs to.
constexpr int group_of(Part p) {
  switch (p) {
    case Part::ZeroPos_Pos:
    case Part::ZeroNeg_Neg:
    case Part::PosNeg_Pos:
    case Part::All_Pos:
      return 1;
    case Part::All_Neg:
      return 2;
    default:
      return 0;
  }
}

std::string to_string(Part p);

/// Index structure over a SignList whose conditions have length >= 2.
struct PartitionView {
  /// Indices into Σ, increasing, per part.
  std::array<std::vector<std::size_t>, kNumParts> parts;
  /// Σ_(1), Σ_(2), Σ_(3) as indices into Σ, ordered so that their projections
  /// are lex-increasing.
  std::array<std::vector<std::size_t>, 3> groups;
  /// The projected lists hatΣ_(1), hatΣ_(2), hatΣ_(3).
  std::array<SignList, 3> projected;
  /// Part of each element of Σ.
  std::vector<Part> part_of;
  /// siblings[j][lex_rank(b)]: index of (b, project(Σ[j])) in Σ, or npos.
  std::vector<std::array<std::size_t, 3>> siblings;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const std::vector<std::size_t>& part(Part p) const { return parts[static_cast<std::size_t>(p)]; }
  std::size_t sibling(std::size_t j, Sign b) const { return siblings[j][lex_rank(b)]; }
  /// Concatenation of the three groups: the block ordering of Σ.
  std::vector<std::size_t> block_order() const;
};

/// Throws std::invalid_argument if Σ is empty or its conditions are shorter than 2.
PartitionView partition(const SignList& sigma);

/// The adapted list of multidegrees. Length-1 conditions are the last level.
/// Throws std::invalid_argument on an empty list (or r > 3 at the last level,
/// which a valid SignList cannot produce).
AdaList ada(const SignList& sigma);

/// Mat(A, Σ') for an arbitrary list of conditions. Throws on length mismatch.
IntMatrix mat(std::span<const MultiDeg> rows, std::span<const SignCond> cols);
inline IntMatrix mat(const AdaList& rows, const SignList& cols) { return mat(rows, cols.conds()); }

/// Σ reordered into block order (Σ_(1), Σ_(2), Σ_(3)).
std::vector<SignCond> block_ordered(const SignList& sigma);

/// Dense N1..N9 (index 0..8) for Σ in block order; N9···N1 inverts
/// mat(ada(Σ), block_ordered(Σ)). M_k^{-1} blocks come from the recursive
/// products of the lower levels' factors.
std::array<RatMatrix, 9> factors(const SignList& sigma);

/// Inverse of mat(ada(Σ), Σ) assembled from the product of the factors,
/// recursively; at the last level the exact inverse of the base matrix.
RatMatrix inverse_via_factors(const SignList& sigma);

/// All (b, σ̂) with b in `allowed_first` and σ̂ in `feasible_hat`, lex-sorted.
SignList extend_candidates(const SignList& feasible_hat, std::span<const Sign> allowed_first);

}  // namespace signdet
