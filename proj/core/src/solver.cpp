#include "signdet/solver.hpp"

#include <map>
#include <stdexcept>

namespace signdet {

namespace {

// Inverses of the five last-level matrices. Every row is a signed sum of
// right-hand side entries, halved where `halve` is set.
struct BaseInverse {
  std::size_t r;
  Sign signs[3];
  int coef[3][3];
  bool halve[3];
};

constexpr BaseInverse kBaseInverses[] = {
    {1, {Sign::Zero}, {{1}}, {false}},
    {2, {Sign::Zero, Sign::Pos}, {{1, -1}, {0, 1}}, {false, false}},
    {2, {Sign::Zero, Sign::Neg}, {{1, 1}, {0, -1}}, {false, false}},
    {2, {Sign::Pos, Sign::Neg}, {{1, 1}, {1, -1}}, {true, true}},
    {3, {Sign::Zero, Sign::Pos, Sign::Neg}, {{1, 0, -1}, {0, 1, 1}, {0, -1, 1}}, {false, true, true}},
};

const BaseInverse& lookup_base(const SignList& sigma) {
  if (sigma.cond_length() != 1) throw std::invalid_argument("base case needs conditions of length 1");
  // Mat is [[1]] for every single condition.
  if (sigma.size() == 1) return kBaseInverses[0];
  for (const auto& b : kBaseInverses) {
    if (b.r != sigma.size()) continue;
    bool match = true;
    for (std::size_t k = 0; k < b.r; ++k) match = match && sigma[k][0] == b.signs[k];
    if (match) return b;
  }
  throw std::invalid_argument("not a last-level sign list: " + std::to_string(sigma.size()) + " conditions");
}

// dst -= e * x for a structurally known e = +-1.
void subtract_signed(Rat& dst, int e, const Rat& x) {
  if (e > 0)
    dst -= x;
  else
    dst += x;
}

// Signed sum whose first term is stored with a sign flag instead of being
// negated.
struct SignedAcc {
  bool used = false;
  int flag = 1;
  Rat value;

  void add(int e, const Rat& x, std::uint64_t& ops) {
    if (!used) {
      used = true;
      flag = e;
      value = x;
      return;
    }
    if (e == flag)
      value += x;
    else
      value -= x;
    ++ops;
  }
};

constexpr Part kXYColumns[3] = {Part::Pos, Part::Neg, Part::PosNeg_Neg};
constexpr Part kZColumns[3] = {Part::ZeroPos_Pos, Part::ZeroNeg_Neg, Part::All_Pos};

class InPlaceSolver {
 public:
  InPlaceSolver(std::vector<Rat>& c, OpCounter& counter, SolveOptions opts) : c_(c), counter_(counter), opts_(opts) {}

  // On entry row j of the right-hand side is at c[slots[j]]; on exit the
  // solution component of Σ[j] is there.
  void solve(const SolvePlan& plan, std::span<const std::size_t> slots, bool top, int stop_after = 9) {
    if (plan.is_base()) {
      base(plan.sigma(), slots);
      return;
    }
    const auto& sigma = plan.sigma();
    const auto& view = plan.view();
    const auto& g1 = view.groups[0];
    const auto& g2 = view.groups[1];
    const auto& g3 = view.groups[2];
    auto at = [&](std::size_t j) -> Rat& { return c_[slots[j]]; };
    const AdaList empty;
    const AdaList& ada2 = plan.child(1) ? plan.child(1)->ada() : empty;
    const AdaList& ada3 = plan.child(2) ? plan.child(2)->ada() : empty;

    std::uint64_t mark = counter_.count();
    auto finish_step = [&](int step) {
      if (top) counter_.note_step(step, counter_.count() - mark);
      mark = counter_.count();
      return top && step == stop_after;
    };

    // Step 0: rows of block k move to the positions of Σ_(k).
    {
      std::vector<Rat> rhs(plan.size());
      for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j].swap(at(j));
      std::size_t row = 0;
      for (const auto& g : view.groups)
        for (std::size_t j : g) at(j).swap(rhs[row++]);
    }
    if (top && stop_after == 0) return;

    // Step 1
    recurse(*plan.child(0), slots, g1);
    if (finish_step(1)) return;

    // Step 2
    std::uint64_t ops = 0;
    if (!opts_.optimized_step22) {
      for (std::size_t q = 0; q < g2.size(); ++q) {
        Rat& dst = at(g2[q]);
        for (Part part : kXYColumns)
          for (std::size_t j : view.part(part))
            if (int e = mat_entry(1, ada2[q], sigma[j]); e != 0) {
              subtract_signed(dst, e, at(j));
              ++ops;
            }
      }
      for (std::size_t u = 0; u < g3.size(); ++u) {
        Rat& dst = at(g3[u]);
        for (Part part : kXYColumns)
          for (std::size_t j : view.part(part))
            if (int e = mat_entry(2, ada3[u], sigma[j]); e != 0) {
              subtract_signed(dst, e, at(j));
              ++ops;
            }
      }
    } else {
      std::vector<std::array<SignedAcc, 3>> acc(g2.size());
      for (std::size_t q = 0; q < g2.size(); ++q) {
        for (int k = 0; k < 3; ++k)
          for (std::size_t j : view.part(kXYColumns[k]))
            if (int e = mat_entry(1, ada2[q], sigma[j]); e != 0) acc[q][k].add(e, at(j), ops);
        for (const auto& a : acc[q])
          if (a.used) {
            subtract_signed(at(g2[q]), a.flag, a.value);
            ++ops;
          }
      }
      // Rows 2 x Ada(hatΣ_(3)) reuse v, v', v'' with signs -, +, +.
      for (std::size_t u = 0; u < g3.size(); ++u) {
        const auto& a = acc[plan.ada3_in_ada2()[u]];
        for (int k = 0; k < 3; ++k)
          if (a[k].used) {
            subtract_signed(at(g3[u]), k == 0 ? a[k].flag : -a[k].flag, a[k].value);
            ++ops;
          }
      }
    }
    counter_.add(ops);
    if (finish_step(2)) return;

    // Step 3
    if (!g2.empty()) recurse(*plan.child(1), slots, g2);
    if (finish_step(3)) return;

    // Step 4
    for (std::size_t j : view.part(Part::ZeroNeg_Neg)) {
      at(j) = -at(j);
      counter_.add();
    }
    for (std::size_t j : view.part(Part::PosNeg_Pos)) {
      at(j) /= 2;
      counter_.add();
    }
    if (finish_step(4)) return;

    // Step 5
    ops = 0;
    for (std::size_t u = 0; u < g3.size(); ++u) {
      Rat& dst = at(g3[u]);
      for (Part part : kZColumns)
        for (std::size_t j : view.part(part))
          if (int e = mat_entry(2, ada3[u], sigma[j]); e != 0) {
            subtract_signed(dst, e, at(j));
            ++ops;
          }
    }
    counter_.add(ops);
    if (finish_step(5)) return;

    // Step 6
    if (!g3.empty()) recurse(*plan.child(2), slots, g3);
    if (finish_step(6)) return;

    // Step 7
    for (std::size_t j : g3) {
      at(j) /= 2;
      counter_.add();
    }
    if (finish_step(7)) return;

    // Step 8
    for (std::size_t j : g3) {
      at(view.sibling(j, Sign::Pos)) += at(j);
      counter_.add();
    }
    if (finish_step(8)) return;

    // Step 9
    for (std::size_t j : view.part(Part::ZeroPos_Zero)) {
      at(j) -= at(view.sibling(j, Sign::Pos));
      counter_.add();
    }
    for (std::size_t j : view.part(Part::ZeroNeg_Zero)) {
      at(j) -= at(view.sibling(j, Sign::Neg));
      counter_.add();
    }
    for (std::size_t j : view.part(Part::PosNeg_Neg)) {
      at(j) -= at(view.sibling(j, Sign::Pos));
      counter_.add();
    }
    for (std::size_t j : view.part(Part::All_Zero)) {
      at(j) -= at(view.sibling(j, Sign::Pos));
      at(j) -= at(view.sibling(j, Sign::Neg));
      counter_.add(2);
    }
    finish_step(9);
  }

 private:
  void recurse(const SolvePlan& child, std::span<const std::size_t> slots, const std::vector<std::size_t>& group) {
    std::vector<std::size_t> child_slots(group.size());
    for (std::size_t p = 0; p < group.size(); ++p) child_slots[p] = slots[group[p]];
    solve(child, child_slots, false);
  }

  void base(const SignList& sigma, std::span<const std::size_t> slots) {
    const BaseInverse& inv = lookup_base(sigma);
    Rat t[3];
    for (std::size_t j = 0; j < inv.r; ++j) t[j] = c_[slots[j]];
    for (std::size_t row = 0; row < inv.r; ++row) {
      SignedAcc acc;
      std::uint64_t ops = 0;
      // Start from a positive term when there is one.
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t j = 0; j < inv.r; ++j) {
          const int e = inv.coef[row][j];
          if (e == 0 || (pass == 0) != (e > 0)) continue;
          acc.add(e, t[j], ops);
        }
      Rat out = acc.used ? acc.value : Rat(0);
      if (acc.used && acc.flag < 0) {
        out = -out;
        ++ops;
      }
      if (inv.halve[row]) {
        out /= 2;
        ++ops;
      }
      counter_.add(ops);
      c_[slots[row]] = std::move(out);
    }
  }

  std::vector<Rat>& c_;
  OpCounter& counter_;
  SolveOptions opts_;
};

std::vector<Rat> run(const SolvePlan& plan, std::span<const Rat> t, OpCounter& counter, SolveOptions opts,
                     int stop_after) {
  if (t.size() != plan.size())
    throw std::invalid_argument("auxlinsolve: right-hand side has " + std::to_string(t.size()) +
                                " entries for " + std::to_string(plan.size()) + " sign conditions");
  std::vector<Rat> c(t.begin(), t.end());
  std::vector<std::size_t> slots(c.size());
  for (std::size_t j = 0; j < slots.size(); ++j) slots[j] = j;
  InPlaceSolver(c, counter, opts).solve(plan, slots, true, stop_after);
  return c;
}

}  // namespace

SolvePlan::SolvePlan(SignList sigma) : sigma_(std::move(sigma)) {
  if (sigma_.empty()) throw std::invalid_argument("SolvePlan: empty sign list");
  if (is_base()) {
    lookup_base(sigma_);
    ada_ = signdet::ada(sigma_);
    return;
  }
  view_ = partition(sigma_);
  ada_.reserve(sigma_.size());
  for (int k = 0; k < 3; ++k) {
    if (view_.projected[k].empty()) continue;
    children_[k] = std::make_unique<SolvePlan>(view_.projected[k]);
    for (const auto& alpha : children_[k]->ada()) ada_.push_back(extend(k, alpha));
  }
  if (children_[2]) {
    std::map<MultiDeg, std::size_t> rows;
    const auto& ada2 = children_[1]->ada();
    for (std::size_t q = 0; q < ada2.size(); ++q) rows.emplace(ada2[q], q);
    for (const auto& alpha : children_[2]->ada()) {
      auto it = rows.find(alpha);
      if (it == rows.end()) throw std::logic_error("Ada(hatΣ_(3)) is not contained in Ada(hatΣ_(2))");
      ada3_in_ada2_.push_back(it->second);
    }
  }
}

RatMatrix base_inverse(const SignList& sigma) {
  const BaseInverse& b = lookup_base(sigma);
  RatMatrix m(b.r, b.r);
  for (std::size_t i = 0; i < b.r; ++i)
    for (std::size_t j = 0; j < b.r; ++j) m(i, j) = b.halve[i] ? Rat(Rat(b.coef[i][j]) / 2) : Rat(b.coef[i][j]);
  return m;
}

CountVec base_solve(const SignList& sigma, std::span<const Rat> t, OpCounter& counter) {
  lookup_base(sigma);
  return auxlinsolve(SolvePlan(sigma), t, counter);
}

CountVec auxlinsolve(const SolvePlan& plan, std::span<const Rat> t, OpCounter& counter, SolveOptions opts) {
  return run(plan, t, counter, opts, 9);
}

CountVec auxlinsolve(const SignList& sigma, std::span<const Rat> t, OpCounter& counter, SolveOptions opts) {
  return auxlinsolve(SolvePlan(sigma), t, counter, opts);
}

std::vector<Rat> after_step_state(const SignList& sigma, std::span<const Rat> t, int step, SolveOptions opts) {
  if (step < 0 || step > 9) throw std::invalid_argument("after_step_state: step must be in 0..9");
  const SolvePlan plan(sigma);
  if (plan.is_base()) throw std::invalid_argument("after_step_state: needs conditions of length >= 2");
  OpCounter counter;
  const auto c = run(plan, t, counter, opts, step);
  std::vector<Rat> out;
  out.reserve(c.size());
  for (std::size_t j : plan.view().block_order()) out.push_back(c[j]);
  return out;
}

}  // namespace signdet
