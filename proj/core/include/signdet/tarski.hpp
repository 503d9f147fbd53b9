#pragma once

#include <span>
#include <vector>

#include "signdet/poly.hpp"
#include "signdet/rational.hpp"
#include "signdet/sign.hpp"

namespace signdet {

/// Signed remainder sequence s0 = p, s1 = q, s_{j+1} = -rem(s_{j-1}, s_j),
/// stopped before the first zero remainder. Terms from s2 on are replaced by
/// their primitive part; scale[j] is the positive factor so that
/// polys[j] = scale[j] * (exact term j).
struct SignedRemSeq {
  std::vector<Poly> polys;
  std::vector<Rat> scale;

  std::vector<Sign> signs_at(const Rat& x) const;
  std::vector<Sign> signs_at(Infinity end) const;
};

/// Throws std::invalid_argument if p is zero.
SignedRemSeq signed_rem_seq(const Poly& p, const Poly& q);

std::size_t sign_variations(std::span<const Sign> signs);

/// Tarski query of q on the distinct real roots of p0:
/// #{x : p0(x) = 0, q(x) > 0} - #{x : p0(x) = 0, q(x) < 0}.
/// Throws std::invalid_argument if p0 is zero.
long taq(const Poly& q, const Poly& p0);

/// Number of distinct real roots of p0 in the open interval (a, b).
/// Throws std::invalid_argument if a >= b, p0 is zero, or an endpoint is a root.
std::size_t count_roots_in(const Poly& p0, const Rat& a, const Rat& b);

}  // namespace signdet
