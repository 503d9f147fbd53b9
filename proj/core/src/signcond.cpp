#include "signdet/signcond.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace signdet {

SignCond SignCond::of(std::initializer_list<int> values) {
  std::vector<Sign> signs;
  signs.reserve(values.size());
  for (int v : values) {
    if (v < -1 || v > 1) throw std::invalid_argument("sign value out of range");
    signs.push_back(sign_of(v));
  }
  return SignCond(std::move(signs));
}

std::strong_ordering operator<=>(const SignCond& a, const SignCond& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = lex_compare(a[k], b[k]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::strong_ordering lex_cmp(const SignCond& a, const SignCond& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lex_cmp: sign conditions of different lengths");
  return a <=> b;
}

SignCond project(const SignCond& s) {
  if (s.size() < 2) throw std::invalid_argument("project: sign condition of length < 2");
  return SignCond(std::vector<Sign>(s.signs().begin() + 1, s.signs().end()));
}

SignCond extend(Sign first, const SignCond& rest) {
  std::vector<Sign> v;
  v.reserve(rest.size() + 1);
  v.push_back(first);
  v.insert(v.end(), rest.signs().begin(), rest.signs().end());
  return SignCond(std::move(v));
}

std::string to_string(const SignCond& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += to_string(s[k]);
  }
  return out + ")";
}

SignList::SignList(std::vector<SignCond> conds) : conds_(std::move(conds)) {
  for (std::size_t j = 1; j < conds_.size(); ++j) {
    if (conds_[j].size() != conds_[0].size()) throw std::invalid_argument("SignList: conditions of different lengths");
    if (!(conds_[j - 1] < conds_[j])) throw std::invalid_argument("SignList: not strictly increasing");
  }
}

SignList SignList::from_unsorted(std::vector<SignCond> conds) {
  std::sort(conds.begin(), conds.end());
  conds.erase(std::unique(conds.begin(), conds.end()), conds.end());
  return SignList(std::move(conds));
}

MultiDeg::MultiDeg(std::vector<std::uint8_t> degs) : degs_(std::move(degs)) {
  for (auto d : degs_)
    if (d > 2) throw std::invalid_argument("MultiDeg: exponent outside {0,1,2}");
}

MultiDeg MultiDeg::of(std::initializer_list<int> values) {
  std::vector<std::uint8_t> v;
  for (int x : values) {
    if (x < 0 || x > 2) throw std::invalid_argument("MultiDeg: exponent outside {0,1,2}");
    v.push_back(static_cast<std::uint8_t>(x));
  }
  return MultiDeg(std::move(v));
}

MultiDeg extend(int first, const MultiDeg& rest) {
  std::vector<std::uint8_t> v;
  v.reserve(rest.size() + 1);
  v.push_back(static_cast<std::uint8_t>(first));
  v.insert(v.end(), rest.degs().begin(), rest.degs().end());
  return MultiDeg(std::move(v));
}

std::string to_string(const MultiDeg& a) {
  std::string out = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(a[k]);
  }
  return out + ")";
}

int mat_entry(const MultiDeg& alpha, const SignCond& sigma) {
  int v = 1;
  for (std::size_t k = 0; k < alpha.size() && v != 0; ++k) v *= power(sigma[k], alpha[k]);
  return v;
}

int mat_entry(int first, const MultiDeg& rest, const SignCond& sigma) {
  int v = power(sigma[0], first);
  for (std::size_t k = 0; k < rest.size() && v != 0; ++k) v *= power(sigma[k + 1], rest[k]);
  return v;
}

std::string to_string(Part p) {
  static constexpr const char* kNames[kNumParts] = {
      "{0}^0",      "{1}^1",      "{-1}^-1",      "{0,1}^0",       "{0,1}^1",       "{0,-1}^0",
      "{0,-1}^-1", "{1,-1}^1", "{1,-1}^-1", "{0,1,-1}^0", "{0,1,-1}^1", "{0,1,-1}^-1"};
  return kNames[static_cast<std::size_t>(p)];
}

std::vector<std::size_t> PartitionView::block_order() const {
  std::vector<std::size_t> out;
  out.reserve(part_of.size());
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

namespace {

// Part of the element with first sign b, given the set of first signs
// present for its projection (bit lex_rank(b) set for each).
Part classify(unsigned mask, Sign b) {
  constexpr unsigned Z = 1, P = 2, N = 4;
  switch (mask) {
    case Z: return Part::Zero;
    case P: return Part::Pos;
    case N: return Part::Neg;
    case Z | P: return b == Sign::Zero ? Part::ZeroPos_Zero : Part::ZeroPos_Pos;
    case Z | N: return b == Sign::Zero ? Part::ZeroNeg_Zero : Part::ZeroNeg_Neg;
    case P | N: return b == Sign::Pos ? Part::PosNeg_Pos : Part::PosNeg_Neg;
    default:
      return b == Sign::Zero ? Part::All_Zero : (b == Sign::Pos ? Part::All_Pos : Part::All_Neg);
  }
}

}  // namespace

PartitionView partition(const SignList& sigma) {
  if (sigma.empty()) throw std::invalid_argument("partition: empty sign list");
  if (sigma.cond_length() < 2) throw std::invalid_argument("partition: conditions of length < 2");

  constexpr auto npos = PartitionView::npos;
  std::map<SignCond, std::array<std::size_t, 3>> by_hat;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    auto [it, inserted] = by_hat.try_emplace(project(sigma[j]), std::array<std::size_t, 3>{npos, npos, npos});
    it->second[lex_rank(sigma[j][0])] = j;
  }

  PartitionView view;
  view.part_of.resize(sigma.size());
  view.siblings.resize(sigma.size());
  std::array<std::vector<SignCond>, 3> projected;
  for (const auto& [hat, idx] : by_hat) {
    unsigned mask = 0;
    for (int k = 0; k < 3; ++k)
      if (idx[k] != npos) mask |= 1u << k;
    for (int k = 0; k < 3; ++k) {
      const std::size_t j = idx[k];
      if (j == npos) continue;
      const Part part = classify(mask, kSignsInLexOrder[k]);
      const int g = group_of(part);
      view.part_of[j] = part;
      view.siblings[j] = idx;
      view.parts[static_cast<std::size_t>(part)].push_back(j);
      view.groups[g].push_back(j);
      projected[g].push_back(hat);
    }
  }
  for (auto& p : view.parts) std::sort(p.begin(), p.end());
  for (int g = 0; g < 3; ++g) view.projected[g] = SignList(std::move(projected[g]));
  return view;
}

AdaList ada(const SignList& sigma) {
  if (sigma.empty()) throw std::invalid_argument("ada: empty sign list");
  AdaList out;
  if (sigma.cond_length() == 1) {
    if (sigma.size() > 3) throw std::invalid_argument("ada: more than three conditions at the last level");
    for (std::size_t k = 0; k < sigma.size(); ++k) out.push_back(MultiDeg::of({static_cast<int>(k)}));
    return out;
  }
  const auto view = partition(sigma);
  out.reserve(sigma.size());
  for (int g = 0; g < 3; ++g) {
    if (view.projected[g].empty()) continue;
    for (const auto& alpha : ada(view.projected[g])) out.push_back(extend(g, alpha));
  }
  return out;
}

IntMatrix mat(std::span<const MultiDeg> rows, std::span<const SignCond> cols) {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i].size() != cols[j].size()) throw std::invalid_argument("mat: length mismatch");
      m(i, j) = mat_entry(rows[i], cols[j]);
    }
  return m;
}

std::vector<SignCond> block_ordered(const SignList& sigma) {
  std::vector<SignCond> out;
  for (std::size_t j : partition(sigma).block_order()) out.push_back(sigma[j]);
  return out;
}

namespace {

std::size_t position_in(const SignList& list, const SignCond& s) {
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) throw std::logic_error("projected lists are not nested");
  return static_cast<std::size_t>(it - list.begin());
}

void embed(RatMatrix& dst, std::size_t offset, const RatMatrix& block) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) dst(offset + i, offset + j) = block(i, j);
}

}  // namespace

std::array<RatMatrix, 9> factors(const SignList& sigma) {
  const auto view = partition(sigma);
  const auto& g1 = view.groups[0];
  const auto& g2 = view.groups[1];
  const auto& g3 = view.groups[2];
  const std::size_t r1 = g1.size(), r2 = g2.size(), r3 = g3.size();
  const std::size_t r = sigma.size();
  const std::size_t o2 = r1, o3 = r1 + r2;
  const AdaList ada2 = r2 ? ada(view.projected[1]) : AdaList{};
  const AdaList ada3 = r3 ? ada(view.projected[2]) : AdaList{};

  std::array<RatMatrix, 9> n;
  for (auto& m : n) m = RatMatrix::identity(r);

  embed(n[0], 0, inverse_via_factors(view.projected[0]));

  for (std::size_t q = 0; q < r2; ++q)
    for (std::size_t p = 0; p < r1; ++p) n[1](o2 + q, p) = -mat_entry(1, ada2[q], sigma[g1[p]]);
  for (std::size_t u = 0; u < r3; ++u)
    for (std::size_t p = 0; p < r1; ++p) n[1](o3 + u, p) = -mat_entry(2, ada3[u], sigma[g1[p]]);

  if (r2) embed(n[2], o2, inverse_via_factors(view.projected[1]));

  for (std::size_t q = 0; q < r2; ++q) {
    const Part part = view.part_of[g2[q]];
    if (part == Part::ZeroNeg_Neg) n[3](o2 + q, o2 + q) = -1;
    if (part == Part::PosNeg_Pos) n[3](o2 + q, o2 + q) = Rat(1, 2);
  }

  for (std::size_t u = 0; u < r3; ++u)
    for (std::size_t q = 0; q < r2; ++q) {
      if (view.part_of[g2[q]] == Part::PosNeg_Pos) continue;
      n[4](o3 + u, o2 + q) = -mat_entry(2, ada3[u], sigma[g2[q]]);
    }

  if (r3) embed(n[5], o3, inverse_via_factors(view.projected[2]));

  for (std::size_t u = 0; u < r3; ++u) n[6](o3 + u, o3 + u) = Rat(1, 2);

  for (std::size_t u = 0; u < r3; ++u) n[7](o2 + position_in(view.projected[1], view.projected[2][u]), o3 + u) = 1;

  for (std::size_t q = 0; q < r2; ++q) n[8](position_in(view.projected[0], view.projected[1][q]), o2 + q) = -1;
  for (std::size_t u = 0; u < r3; ++u) n[8](position_in(view.projected[0], view.projected[2][u]), o3 + u) = -1;

  return n;
}

RatMatrix inverse_via_factors(const SignList& sigma) {
  if (sigma.cond_length() == 1) {
    auto inv = inverse(to_rat(mat(ada(sigma), sigma)));
    if (!inv) throw std::logic_error("base matrix is singular");
    return *inv;
  }
  const auto n = factors(sigma);
  RatMatrix prod = n[0];
  for (std::size_t k = 1; k < n.size(); ++k) prod = n[k] * prod;
  // prod inverts the block-ordered matrix; row q belongs to Σ[order[q]].
  const auto order = partition(sigma).block_order();
  RatMatrix out(prod.rows(), prod.cols());
  for (std::size_t q = 0; q < order.size(); ++q)
    for (std::size_t j = 0; j < prod.cols(); ++j) out(order[q], j) = prod(q, j);
  return out;
}

SignList extend_candidates(const SignList& feasible_hat, std::span<const Sign> allowed_first) {
  std::vector<SignCond> out;
  for (Sign b : allowed_first)
    for (const auto& hat : feasible_hat) out.push_back(extend(b, hat));
  return SignList::from_unsorted(std::move(out));
}

}  // namespace signdet
