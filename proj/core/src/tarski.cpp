#include "signdet/tarski.hpp"

#include <stdexcept>

namespace signdet {

std::vector<Sign> SignedRemSeq::signs_at(const Rat& x) const {
  std::vector<Sign> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(sign_at(p, x));
  return out;
}

std::vector<Sign> SignedRemSeq::signs_at(Infinity end) const {
  std::vector<Sign> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(sign_at_inf(p, end));
  return out;
}

SignedRemSeq signed_rem_seq(const Poly& p, const Poly& q) {
  if (p.is_zero()) throw std::invalid_argument("signed_rem_seq: first polynomial is zero");
  SignedRemSeq seq;
  seq.polys.push_back(p);
  seq.scale.emplace_back(1);
  if (q.is_zero()) return seq;
  seq.polys.push_back(q);
  seq.scale.emplace_back(1);

  // Scaling an entry by a positive constant only scales the rest of the
  // sequence by positive constants, so signs are unaffected.
  Rat acc_prev = 1, acc_cur = 1;
  for (;;) {
    const auto n = seq.polys.size();
    Poly r = -rem(seq.polys[n - 2], seq.polys[n - 1]);
    if (r.is_zero()) break;
    auto [prim, factor] = primitive_part(r);
    // rem(a*E, b*F) = a*rem(E, F) for positive a, b.
    const Rat acc_next = acc_prev * factor;
    seq.polys.push_back(std::move(prim));
    seq.scale.push_back(acc_next);
    acc_prev = acc_cur;
    acc_cur = acc_next;
  }
  return seq;
}

std::size_t sign_variations(std::span<const Sign> signs) {
  std::size_t count = 0;
  Sign last = Sign::Zero;
  for (Sign s : signs) {
    if (s == Sign::Zero) continue;
    if (last != Sign::Zero && s != last) ++count;
    last = s;
  }
  return count;
}

long taq(const Poly& q, const Poly& p0) {
  if (p0.is_zero()) throw std::invalid_argument("taq: P0 is zero");
  if (q.is_zero() || p0.degree() == 0) return 0;
  const Poly start = primitive_part(p0).first;
  const Poly second = primitive_part(derivative(p0) * q).first;
  const auto seq = signed_rem_seq(start, second);
  const auto at_minus = seq.signs_at(Infinity::Minus);
  const auto at_plus = seq.signs_at(Infinity::Plus);
  return static_cast<long>(sign_variations(at_minus)) - static_cast<long>(sign_variations(at_plus));
}

std::size_t count_roots_in(const Poly& p0, const Rat& a, const Rat& b) {
  if (p0.is_zero()) throw std::invalid_argument("count_roots_in: polynomial is zero");
  if (a >= b) throw std::invalid_argument("count_roots_in: empty interval");
  if (eval(p0, a) == 0 || eval(p0, b) == 0) throw std::invalid_argument("count_roots_in: endpoint is a root");
  if (p0.degree() == 0) return 0;
  const auto seq = signed_rem_seq(primitive_part(p0).first, primitive_part(derivative(p0)).first);
  const auto va = sign_variations(seq.signs_at(a));
  const auto vb = sign_variations(seq.signs_at(b));
  return va - vb;
}

}  // namespace signdet
