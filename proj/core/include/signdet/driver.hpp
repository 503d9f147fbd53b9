#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "signdet/poly.hpp"
#include "signdet/signcond.hpp"
#include "signdet/solver.hpp"

namespace signdet {

struct SignDetRow {
  /// Signs of P1..Ps, P1 first.
  SignCond signs;
  std::size_t count = 0;

  friend bool operator==(const SignDetRow&, const SignDetRow&) = default;
};

/// Bookkeeping for one step of the incremental method (adding P_index).
struct StepTrace {
  std::size_t index = 0;  ///< 1-based polynomial index i
  std::size_t r = 0;      ///< |Σ|, also the number of Tarski queries issued
  std::size_t ada_size = 0;
  std::uint64_t ops = 0;
  std::uint64_t budget = 0;  ///< 2 r^2
  std::array<std::uint64_t, 10> step_ops{};
  /// Largest degree among the queried products (-1 if all were zero).
  int max_query_degree = -1;
  /// Counts over Σ before pruning.
  std::vector<Rat> counts;
};

struct SignDetResult {
  std::size_t m = 0;  ///< distinct real roots of P0
  std::size_t num_polys = 0;
  /// Feasible conditions in lex order (0 < 1 < -1, P1 most significant).
  std::vector<SignDetRow> rows;
  std::vector<StepTrace> trace;
};

/// Same m, polynomial count and rows; traces are ignored.
bool same_rows(const SignDetResult& a, const SignDetResult& b);

struct SinglePolyFeasible {
  /// Feasible signs of p in the order 0, 1, -1.
  std::vector<Sign> feasible;
  /// counts[lex_rank(b)] = #{x in Z : sign p(x) = b}
  std::array<std::size_t, 3> counts{};
  /// The three queries taq(1), taq(p), taq(p^2).
  std::array<long, 3> queries{};
  std::uint64_t ops = 0;
  int max_query_degree = -1;
};

/// Throws std::invalid_argument if p0 is zero.
SinglePolyFeasible single_poly_feasible(const Poly& p, const Poly& p0);
/// Variant reusing a known m = taq(1, p0).
SinglePolyFeasible single_poly_feasible(const Poly& p, const Poly& p0, long m);

/// prod_j polys[j]^alpha[j] mod p0 for each alpha, reducing after every
/// multiplication.
std::vector<Poly> products_for_ada(const AdaList& rows, std::span<const Poly> polys, const Poly& p0);

struct DriverOptions {
  SolveOptions solve;
};

/// Feasible sign conditions of polys on the real zeros of p0, adding the
/// polynomials from last to first and solving each step's system with
/// auxlinsolve. Throws std::invalid_argument if p0 is zero and
/// std::logic_error if a step produces counts that are not nonnegative
/// integers summing to m.
SignDetResult signdet_incremental(const Poly& p0, std::span<const Poly> polys, DriverOptions opts = {});

inline constexpr std::size_t kNaiveMaxPolys = 6;

/// Reference method: all 3^s conditions against all 3^s multidegrees, solved
/// by dense elimination. Throws std::invalid_argument for s > 6.
SignDetResult signdet_naive(const Poly& p0, std::span<const Poly> polys);

}  // namespace signdet
