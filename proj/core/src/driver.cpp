#include "signdet/driver.hpp"

#include <algorithm>
#include <stdexcept>

#include "signdet/tarski.hpp"

namespace signdet {

bool same_rows(const SignDetResult& a, const SignDetResult& b) {
  return a.m == b.m && a.num_polys == b.num_polys && a.rows == b.rows;
}

SinglePolyFeasible single_poly_feasible(const Poly& p, const Poly& p0) {
  if (p0.is_zero()) throw std::invalid_argument("single_poly_feasible: P0 is zero");
  return single_poly_feasible(p, p0, taq(Poly{1}, p0));
}

SinglePolyFeasible single_poly_feasible(const Poly& p, const Poly& p0, long m) {
  if (p0.is_zero()) throw std::invalid_argument("single_poly_feasible: P0 is zero");
  SinglePolyFeasible out;
  const Poly reduced = mod_reduce(p, p0);
  const Poly squared = mod_reduce(reduced * reduced, p0);
  out.queries = {m, taq(reduced, p0), taq(squared, p0)};
  out.max_query_degree = std::max({0, reduced.degree(), squared.degree()});

  static const SignList kAllSigns({SignCond::of({0}), SignCond::of({1}), SignCond::of({-1})});
  const std::vector<Rat> t = {Rat(out.queries[0]), Rat(out.queries[1]), Rat(out.queries[2])};
  OpCounter counter;
  const auto c = base_solve(kAllSigns, t, counter);
  out.ops = counter.count();
  for (std::size_t k = 0; k < 3; ++k) {
    if (!is_integer(c[k]) || c[k] < 0) throw std::logic_error("single_poly_feasible: invalid count");
    out.counts[k] = c[k].get_num().get_ui();
    if (out.counts[k] > 0) out.feasible.push_back(kSignsInLexOrder[k]);
  }
  return out;
}

std::vector<Poly> products_for_ada(const AdaList& rows, std::span<const Poly> polys, const Poly& p0) {
  if (p0.is_zero()) throw std::invalid_argument("products_for_ada: P0 is zero");
  // powers[j][e] = polys[j]^e mod p0
  std::vector<std::array<Poly, 3>> powers(polys.size());
  for (std::size_t j = 0; j < polys.size(); ++j) {
    powers[j][0] = Poly{1};
    powers[j][1] = mod_reduce(polys[j], p0);
    powers[j][2] = mod_reduce(powers[j][1] * powers[j][1], p0);
  }
  std::vector<Poly> out;
  out.reserve(rows.size());
  for (const auto& alpha : rows) {
    if (alpha.size() != polys.size()) throw std::invalid_argument("products_for_ada: length mismatch");
    Poly prod{1};
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] == 0) continue;
      prod = mod_reduce(prod * powers[j][alpha[j]], p0);
    }
    out.push_back(std::move(prod));
  }
  return out;
}

namespace {

std::size_t count_as_size(const Rat& c) {
  if (!is_integer(c) || c < 0) throw std::logic_error("sign determination produced a count of " + c.get_str());
  return c.get_num().get_ui();
}

}  // namespace

SignDetResult signdet_incremental(const Poly& p0, std::span<const Poly> polys, DriverOptions opts) {
  if (p0.is_zero()) throw std::invalid_argument("signdet: P0 is zero");
  SignDetResult result;
  result.num_polys = polys.size();
  const long m = taq(Poly{1}, p0);
  result.m = static_cast<std::size_t>(m);
  if (m == 0) return result;
  if (polys.empty()) {
    result.rows.push_back({SignCond{}, result.m});
    return result;
  }

  const std::size_t s = polys.size();
  // Feasible conditions for P_i..P_s with their counts.
  std::vector<SignCond> feasible;
  std::vector<std::size_t> counts;

  {
    const auto last = single_poly_feasible(polys[s - 1], p0, m);
    StepTrace tr;
    tr.index = s;
    tr.r = 3;
    tr.ada_size = 3;
    tr.ops = last.ops;
    tr.budget = 2 * 3 * 3;
    tr.max_query_degree = last.max_query_degree;
    for (std::size_t k = 0; k < 3; ++k) {
      tr.counts.emplace_back(static_cast<unsigned long>(last.counts[k]));
      if (last.counts[k] == 0) continue;
      feasible.push_back(SignCond({kSignsInLexOrder[k]}));
      counts.push_back(last.counts[k]);
    }
    result.trace.push_back(std::move(tr));
  }

  for (std::size_t i = s - 1; i >= 1; --i) {
    const Poly& p = polys[i - 1];
    const auto allowed = single_poly_feasible(p, p0, m);
    const SignList sigma = extend_candidates(SignList(std::move(feasible)), allowed.feasible);
    const SolvePlan plan(sigma);
    const auto products = products_for_ada(plan.ada(), polys.subspan(i - 1), p0);

    StepTrace tr;
    tr.index = i;
    tr.r = sigma.size();
    tr.ada_size = plan.ada().size();
    QueryVec t;
    t.reserve(products.size());
    for (const auto& q : products) {
      tr.max_query_degree = std::max(tr.max_query_degree, q.degree());
      t.emplace_back(taq(q, p0));
    }
    OpCounter counter;
    const CountVec c = auxlinsolve(plan, t, counter, opts.solve);
    tr.ops = counter.count();
    tr.budget = 2 * static_cast<std::uint64_t>(tr.r) * tr.r;
    tr.step_ops = counter.steps();

    feasible.clear();
    counts.clear();
    std::size_t total = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const std::size_t n = count_as_size(c[j]);
      total += n;
      if (n == 0) continue;
      feasible.push_back(sigma[j]);
      counts.push_back(n);
    }
    if (total != result.m) throw std::logic_error("sign determination counts do not sum to the number of roots");
    tr.counts = c;
    result.trace.push_back(std::move(tr));
  }

  for (std::size_t j = 0; j < feasible.size(); ++j) result.rows.push_back({feasible[j], counts[j]});
  return result;
}

namespace {

void all_conditions(std::size_t s, std::vector<Sign>& prefix, std::vector<SignCond>& out) {
  if (prefix.size() == s) {
    out.emplace_back(prefix);
    return;
  }
  for (Sign b : kSignsInLexOrder) {
    prefix.push_back(b);
    all_conditions(s, prefix, out);
    prefix.pop_back();
  }
}

void all_multidegrees(std::size_t s, std::vector<std::uint8_t>& prefix, AdaList& out) {
  if (prefix.size() == s) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint8_t e = 0; e < 3; ++e) {
    prefix.push_back(e);
    all_multidegrees(s, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SignDetResult signdet_naive(const Poly& p0, std::span<const Poly> polys) {
  if (p0.is_zero()) throw std::invalid_argument("signdet_naive: P0 is zero");
  if (polys.size() > kNaiveMaxPolys) throw std::invalid_argument("signdet_naive: more than 6 polynomials");
  SignDetResult result;
  result.num_polys = polys.size();
  const long m = taq(Poly{1}, p0);
  result.m = static_cast<std::size_t>(m);
  if (m == 0) return result;

  std::vector<SignCond> conds;
  std::vector<Sign> sp;
  all_conditions(polys.size(), sp, conds);
  AdaList degs;
  std::vector<std::uint8_t> dp;
  all_multidegrees(polys.size(), dp, degs);

  std::vector<Rat> t;
  for (const auto& q : products_for_ada(degs, polys, p0)) t.emplace_back(taq(q, p0));
  const auto c = solve_dense(to_rat(mat(degs, conds)), std::move(t));

  std::size_t total = 0;
  for (std::size_t j = 0; j < conds.size(); ++j) {
    const std::size_t n = count_as_size(c[j]);
    total += n;
    if (n > 0) result.rows.push_back({conds[j], n});
  }
  if (total != result.m) throw std::logic_error("naive sign determination counts do not sum to the number of roots");
  return result;
}

}  // namespace signdet
