#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "signdet/poly.hpp"

namespace signdet::cli {

struct Instance {
  Poly p0;
  /// Labels and polynomials P1..Ps in file order.
  std::vector<std::string> names;
  std::vector<Poly> polys;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  /// 1-based, 0 when the error is not tied to a line (e.g. missing P0).
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Lines `NAME: c0,c1,...,cd` (ascending coefficients, integers or a/b);
/// `#` starts a comment. `P0` is mandatory and nonzero.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance (P0 first, then P1..Ps).
std::string format_instance(const Instance& inst);

}  // namespace signdet::cli
