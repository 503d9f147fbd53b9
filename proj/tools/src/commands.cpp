#include "signdet/cli/commands.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "signdet/oracle.hpp"
#include "signdet/random.hpp"
#include "signdet/tarski.hpp"

namespace signdet::cli {

namespace {

std::string format_signs(const SignCond& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ' ';
    out += to_string(s[k]);
  }
  return out;
}

std::uint64_t total_ops(const SignDetResult& r) {
  std::uint64_t n = 0;
  for (const auto& t : r.trace) n += t.ops;
  return n;
}

void report_mismatch(std::ostream& err, const char* what, const SignDetResult& expected, const SignDetResult& got) {
  err << "mismatch against " << what << "\n--- " << what << "\n"
      << format_text(expected, false) << "--- incremental\n"
      << format_text(got, false);
}

}  // namespace

std::string format_text(const SignDetResult& result, bool with_ops) {
  std::ostringstream os;
  os << "m=" << result.m << '\n';
  for (const auto& row : result.rows) {
    const auto signs = format_signs(row.signs);
    os << signs << (signs.empty() ? ": " : " : ") << row.count << '\n';
  }
  if (with_ops) {
    for (const auto& t : result.trace)
      os << "i=" << t.index << " r=" << t.r << " ops=" << t.ops << " budget=" << t.budget << '\n';
    os << "ops_total=" << total_ops(result) << '\n';
  }
  return os.str();
}

std::string format_json(const SignDetResult& result, bool with_ops) {
  nlohmann::json j;
  j["m"] = result.m;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : result.rows) {
    std::vector<int> signs;
    for (Sign s : row.signs.signs()) signs.push_back(to_int(s));
    j["rows"].push_back({{"signs", signs}, {"count", row.count}});
  }
  if (with_ops) {
    j["ops"] = nlohmann::json::array();
    for (const auto& t : result.trace)
      j["ops"].push_back({{"i", t.index}, {"r", t.r}, {"ops", t.ops}, {"budget", t.budget}});
  }
  return j.dump(2) + "\n";
}

int cmd_signs(const Instance& inst, const SignsFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.naive && inst.polys.size() > kNaiveMaxPolys) {
    err << "error: --naive supports at most " << kNaiveMaxPolys << " polynomials\n";
    return kInputError;
  }
  DriverOptions opts;
  opts.solve.optimized_step22 = flags.optimized_step22;
  const auto result = signdet_incremental(inst.p0, inst.polys, opts);

  out << (flags.format == Format::Json ? format_json(result, flags.count_ops) : format_text(result, flags.count_ops));

  int code = kOk;
  if (flags.count_ops) {
    for (const auto& t : result.trace)
      if (t.ops > t.budget) {
        err << "operation budget exceeded at step i=" << t.index << ": " << t.ops << " > " << t.budget << '\n';
        code = kMismatch;
      }
  }
  if (flags.oracle) {
    const auto truth = signdet_bruteforce(inst.p0, inst.polys);
    if (!same_rows(truth, result)) {
      report_mismatch(err, "oracle", truth, result);
      code = kMismatch;
    }
  }
  if (flags.naive) {
    const auto naive = signdet_naive(inst.p0, inst.polys);
    if (!same_rows(naive, result)) {
      report_mismatch(err, "naive", naive, result);
      code = kMismatch;
    }
  }
  return code;
}

std::string format_ratio(std::uint64_t ops, std::uint64_t budget) {
  if (budget == 0) return "0.0000";
  // round(ops * 10^4 / budget), half up
  Int scaled = (Int(ops) * 20000 + budget) / (Int(budget) * 2);
  const Int whole = scaled / 10000;
  const std::string frac = Int(scaled % 10000).get_str();
  return whole.get_str() + "." + std::string(4 - frac.size(), '0') + frac;
}

int cmd_bench(const BenchFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.degree < 1) {
    err << "error: --degree must be >= 1\n";
    return kInputError;
  }
  if (flags.coeff_bound < 1) {
    err << "error: --coeff-bound must be >= 1\n";
    return kInputError;
  }
  out << kBenchCsvHeader << '\n';
  DriverOptions opts;
  opts.solve.optimized_step22 = flags.optimized_step22;
  for (std::size_t trial = 0; trial < flags.trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(flags.seed), static_cast<std::uint32_t>(flags.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    Rng rng(seq);
    // P0 is redrawn until it has a real root, so every trial has steps.
    RandomInstance inst;
    do {
      inst = random_instance(rng, flags.degree, flags.num_polys, flags.coeff_bound);
    } while (taq(Poly{1}, inst.p0) == 0);
    const auto result = signdet_incremental(inst.p0, inst.polys, opts);
    for (const auto& t : result.trace)
      out << flags.seed << ',' << trial << ',' << t.index << ',' << t.r << ',' << t.ops << ',' << t.budget << ','
          << format_ratio(t.ops, t.budget) << '\n';
  }
  return kOk;
}

namespace {

struct GroupResult {
  bool ok = true;
  std::string detail;
};

GroupResult check_base_inverses() {
  const SignList shapes[] = {
      SignList({SignCond::of({0})}),
      SignList({SignCond::of({0}), SignCond::of({1})}),
      SignList({SignCond::of({0}), SignCond::of({-1})}),
      SignList({SignCond::of({1}), SignCond::of({-1})}),
      SignList({SignCond::of({0}), SignCond::of({1}), SignCond::of({-1})}),
  };
  for (const auto& s : shapes) {
    if (!(base_inverse(s) * to_rat(mat(ada(s), s))).is_identity()) return {false, "inverse wrong for r=" + std::to_string(s.size())};
  }
  return {true, "5 inverses"};
}

GroupResult check_factorization(Rng& rng) {
  std::size_t max_r = 0;
  const int lists = 40;
  for (int n = 0; n < lists; ++n) {
    const std::size_t length = 2 + static_cast<std::size_t>(n % 3);
    std::size_t cap = 1;
    for (std::size_t k = 0; k < length; ++k) cap *= 3;
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(60, cap))(rng);
    const auto sigma = random_sign_list(rng, length, r);
    const auto n9 = factors(sigma);
    RatMatrix prod = to_rat(mat(ada(sigma), block_ordered(sigma)));
    for (const auto& f : n9) prod = f * prod;
    if (!prod.is_identity()) return {false, "identity fails for r=" + std::to_string(r)};
    max_r = std::max(max_r, r);
  }
  return {true, std::to_string(lists) + " lists, r up to " + std::to_string(max_r)};
}

GroupResult check_solver(Rng& rng) {
  const int lists = 100;
  for (int n = 0; n < lists; ++n) {
    const std::size_t length = 1 + static_cast<std::size_t>(n % 6);
    std::size_t cap = 1;
    for (std::size_t k = 0; k < length; ++k) cap *= 3;
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(200, cap))(rng);
    const auto sigma = random_sign_list(rng, length, r);
    std::vector<Rat> x(r);
    std::uniform_int_distribution<long> val(-20, 20);
    for (auto& v : x) v = val(rng);
    const auto t = to_rat(mat(ada(sigma), sigma)).apply(x);
    OpCounter counter;
    if (auxlinsolve(sigma, t, counter) != x) return {false, "wrong solution for r=" + std::to_string(r)};
    if (counter.count() > 2 * r * r) return {false, "operation bound exceeded for r=" + std::to_string(r)};
  }
  return {true, std::to_string(lists) + " systems, r up to 200, ops <= 2r^2"};
}

GroupResult check_oracle(Rng& rng) {
  const int instances = 120;
  for (int n = 0; n < instances; ++n) {
    const int degree = std::uniform_int_distribution<int>(1, 10)(rng);
    const std::size_t s = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    const auto inst = n % 2 ? random_instance(rng, degree, s, 20) : random_rooted_instance(rng, degree, s, 20);
    const auto got = signdet_incremental(inst.p0, inst.polys);
    if (!same_rows(signdet_bruteforce(inst.p0, inst.polys), got)) return {false, "oracle mismatch on instance " + std::to_string(n)};
    if (s <= 3 && !same_rows(signdet_naive(inst.p0, inst.polys), got)) return {false, "naive mismatch on instance " + std::to_string(n)};
  }
  return {true, std::to_string(instances) + " random instances"};
}

}  // namespace

int cmd_selftest(std::ostream& out, std::uint64_t seed) {
  Rng rng(seed);
  const std::pair<const char*, std::function<GroupResult()>> groups[] = {
      {"base-inverses", [] { return check_base_inverses(); }},
      {"factorization", [&] { return check_factorization(rng); }},
      {"solver", [&] { return check_solver(rng); }},
      {"oracle", [&] { return check_oracle(rng); }},
  };
  int failures = 0;
  for (const auto& [name, run] : groups) {
    GroupResult res;
    try {
      res = run();
    } catch (const std::exception& e) {
      res = {false, std::string("exception: ") + e.what()};
    }
    out << (res.ok ? "PASS " : "FAIL ") << name << " (" << res.detail << ")\n";
    failures += res.ok ? 0 : 1;
  }
  return failures ? kInputError : kOk;
}

}  // namespace signdet::cli
