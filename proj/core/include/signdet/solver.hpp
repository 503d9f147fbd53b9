#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "signdet/dense.hpp"
#include "signdet/rational.hpp"
#include "signdet/signcond.hpp"

namespace signdet {

using QueryVec = std::vector<Rat>;
using CountVec = std::vector<Rat>;

/// Counts rational operations of a solve. Each scalar +, -, *, / counts one;
/// a multiplication by a structurally known +-1 is a signed addition, and
/// additions to structurally known zeros are free.
class OpCounter {
 public:
  void add(std::uint64_t n = 1) { count_ += n; }
  /// Attributes n already-counted operations to top-level step 2.step.
  void note_step(int step, std::uint64_t n) { steps_[static_cast<std::size_t>(step)] += n; }
  void reset() { *this = OpCounter{}; }

  std::uint64_t count() const { return count_; }
  /// Cost of top-level step 2.j (j = 1..9); index 0 stays 0. All zero when
  /// the top level is a base case.
  const std::array<std::uint64_t, 10>& steps() const { return steps_; }

 private:
  std::uint64_t count_ = 0;
  std::array<std::uint64_t, 10> steps_{};
};

struct SolveOptions {
  /// Use the variant of step 2.2 that shares the X-block products with the
  /// Y-block update.
  bool optimized_step22 = false;
};

/// Precomputed recursion structure for one Σ: the partition at each level,
/// Ada of every projected list and where Ada(hatΣ_(3)) sits inside
/// Ada(hatΣ_(2)). Building it costs no rational arithmetic.
class SolvePlan {
 public:
  explicit SolvePlan(SignList sigma);

  const SignList& sigma() const { return sigma_; }
  std::size_t size() const { return sigma_.size(); }
  bool is_base() const { return sigma_.cond_length() == 1; }
  const AdaList& ada() const { return ada_; }
  /// Only valid when !is_base().
  const PartitionView& view() const { return view_; }
  /// Child plan for hatΣ_(k+1), null when that group is empty.
  const SolvePlan* child(int k) const { return children_[static_cast<std::size_t>(k)].get(); }
  /// Row of Ada(hatΣ_(2)) equal to row u of Ada(hatΣ_(3)).
  const std::vector<std::size_t>& ada3_in_ada2() const { return ada3_in_ada2_; }

 private:
  SignList sigma_;
  AdaList ada_;
  PartitionView view_;
  std::array<std::unique_ptr<SolvePlan>, 3> children_;
  std::vector<std::size_t> ada3_in_ada2_;
};

/// Precomputed inverse of the last-level matrix for Σ ⊆ (0, 1, -1).
/// Throws std::invalid_argument for a list that is not a valid last level.
RatMatrix base_inverse(const SignList& sigma);

/// Solves mat(ada(Σ), Σ) c = t for Σ of length-1 conditions using the
/// precomputed inverse; at most r(2r-1) operations.
CountVec base_solve(const SignList& sigma, std::span<const Rat> t, OpCounter& counter);

/// Solves mat(ada(Σ), Σ) c = t. t is aligned with ada(Σ), the result with Σ.
/// Throws std::invalid_argument on a length mismatch.
CountVec auxlinsolve(const SolvePlan& plan, std::span<const Rat> t, OpCounter& counter, SolveOptions opts = {});
CountVec auxlinsolve(const SignList& sigma, std::span<const Rat> t, OpCounter& counter, SolveOptions opts = {});

/// Solver state after top-level step 2.j (0 <= j <= 9), in block order
/// (Σ_(1), Σ_(2), Σ_(3)). Step 0 returns t; step 9 the solution.
/// Requires conditions of length >= 2.
std::vector<Rat> after_step_state(const SignList& sigma, std::span<const Rat> t, int step,
                                  SolveOptions opts = {});

}  // namespace signdet
