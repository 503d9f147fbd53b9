#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "signdet/cli/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace signdet::cli;

  CLI::App app{"Feasible sign conditions of univariate polynomials on the real roots of P0"};
  app.require_subcommand(1);

  std::string input;
  SignsFlags signs;
  std::string format = "text";
  auto* signs_cmd = app.add_subcommand("signs", "Compute feasible sign conditions for an instance file");
  signs_cmd->add_option("instance", input, "Instance file ('-' for stdin)")->required();
  signs_cmd->add_flag("--oracle", signs.oracle, "Cross-check against root isolation");
  signs_cmd->add_flag("--naive", signs.naive, "Cross-check against the 3^s system");
  signs_cmd->add_flag("--count-ops", signs.count_ops, "Report solver operation counts per step");
  signs_cmd->add_flag("--optimized-step22", signs.optimized_step22, "Share X-block products in step 2.2");
  signs_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts on seeded random instances (CSV)");
  bench_cmd->add_option("--seed", bench.seed, "RNG seed");
  bench_cmd->add_option("--degree", bench.degree, "Polynomial degree")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--num-polys", bench.num_polys, "Number of polynomials P1..Ps");
  bench_cmd->add_option("--trials", bench.trials, "Number of random instances");
  bench_cmd->add_option("--coeff-bound", bench.coeff_bound, "Coefficients uniform in [-B, B]")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--optimized-step22", bench.optimized_step22, "Share X-block products in step 2.2");

  std::uint64_t selftest_seed = 2024;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the embedded verification suite");
  selftest_cmd->add_option("--seed", selftest_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*signs_cmd) {
      signs.format = format == "json" ? Format::Json : Format::Text;
      const auto inst = parse_instance(read_input(input));
      return cmd_signs(inst, signs, std::cout, std::cerr);
    }
    if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
    if (*selftest_cmd) return cmd_selftest(std::cout, selftest_seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
