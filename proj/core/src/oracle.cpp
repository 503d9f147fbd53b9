#include "signdet/oracle.hpp"

#include <map>
#include <stdexcept>

#include "signdet/tarski.hpp"

namespace signdet {

namespace {

void bisect(const Poly& sq, Rat lo, Rat hi, std::size_t count, std::vector<IsolInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({std::move(lo), std::move(hi), false});
    return;
  }
  Rat mid = (lo + hi) / 2;
  if (eval(sq, mid) != 0) {
    const std::size_t left = count_roots_in(sq, lo, mid);
    bisect(sq, lo, mid, left, out);
    bisect(sq, mid, hi, count - left, out);
    return;
  }
  // mid is a root: shrink a window around it until it holds no other root.
  Rat delta = (hi - lo) / 4;
  while (eval(sq, mid - delta) == 0 || eval(sq, mid + delta) == 0 ||
         count_roots_in(sq, mid - delta, mid + delta) != 1)
    delta /= 2;
  const Rat a = mid - delta, b = mid + delta;
  const std::size_t left = count_roots_in(sq, lo, a);
  bisect(sq, lo, a, left, out);
  out.push_back({mid, mid, true});
  bisect(sq, b, hi, count - 1 - left, out);
}

}  // namespace

std::vector<IsolInterval> isolate_roots(const Poly& p0) {
  if (p0.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  std::vector<IsolInterval> out;
  if (p0.degree() == 0) return out;
  const Poly sq = squarefree_part(p0);
  Rat max_coeff = 0;
  for (std::size_t k = 0; k + 1 < sq.size(); ++k) max_coeff = std::max(max_coeff, Rat(abs(sq.coeffs()[k])));
  const Rat bound = 1 + max_coeff / abs(sq.lead());
  bisect(sq, -bound, bound, count_roots_in(sq, -bound, bound), out);
  return out;
}

Sign sign_at_root(const Poly& q, const Poly& p0, const IsolInterval& iv) {
  if (p0.is_zero()) throw std::invalid_argument("sign_at_root: P0 is zero");
  if (iv.exact) {
    if (iv.lo != iv.hi || eval(p0, iv.lo) != 0) throw std::invalid_argument("sign_at_root: exact point is not a root");
    return sign_at(q, iv.lo);
  }
  const Poly sq = squarefree_part(p0);
  if (iv.lo >= iv.hi || eval(sq, iv.lo) == 0 || eval(sq, iv.hi) == 0 || count_roots_in(sq, iv.lo, iv.hi) != 1)
    throw std::invalid_argument("sign_at_root: interval does not isolate a root");
  if (q.is_zero()) return Sign::Zero;

  const Poly g = gcd(sq, q);
  if (g.degree() >= 1 && count_roots_in(g, iv.lo, iv.hi) >= 1) return Sign::Zero;

  Rat lo = iv.lo, hi = iv.hi;
  for (;;) {
    if (eval(q, lo) != 0 && eval(q, hi) != 0 && count_roots_in(q, lo, hi) == 0) return sign_at(q, lo);
    Rat mid = (lo + hi) / 2;
    if (eval(sq, mid) == 0) return sign_at(q, mid);
    if (count_roots_in(sq, lo, mid) == 1)
      hi = std::move(mid);
    else
      lo = std::move(mid);
  }
}

SignDetResult signdet_bruteforce(const Poly& p0, std::span<const Poly> polys) {
  const auto roots = isolate_roots(p0);
  SignDetResult result;
  result.m = roots.size();
  result.num_polys = polys.size();
  std::map<SignCond, std::size_t> tally;
  for (const auto& iv : roots) {
    std::vector<Sign> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys) signs.push_back(sign_at_root(p, p0, iv));
    ++tally[SignCond(std::move(signs))];
  }
  for (auto& [cond, n] : tally) result.rows.push_back({cond, n});
  return result;
}

}  // namespace signdet
