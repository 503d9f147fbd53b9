#pragma once

#include <span>
#include <vector>

#include "signdet/driver.hpp"
#include "signdet/poly.hpp"
#include "signdet/rational.hpp"

namespace signdet {

/// Isolates one distinct real root: the open interval (lo, hi) with
/// non-root endpoints, or the rational point lo == hi when exact.
struct IsolInterval {
  Rat lo;
  Rat hi;
  bool exact = false;
};

/// Sorted, disjoint isolating intervals for the distinct real roots of p0,
/// by Sturm bisection from the Cauchy bound. Throws if p0 is zero.
std::vector<IsolInterval> isolate_roots(const Poly& p0);

/// Exact sign of q at the root of p0 isolated by iv.
/// Throws std::invalid_argument if iv does not isolate a root of p0.
Sign sign_at_root(const Poly& q, const Poly& p0, const IsolInterval& iv);

/// Ground truth: evaluate every polynomial at every isolated root.
SignDetResult signdet_bruteforce(const Poly& p0, std::span<const Poly> polys);

}  // namespace signdet
