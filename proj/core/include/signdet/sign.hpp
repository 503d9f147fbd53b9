#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace signdet {

enum class Sign : std::int8_t { Neg = -1, Zero = 0, Pos = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign sign_of(int v) { return v < 0 ? Sign::Neg : (v > 0 ? Sign::Pos : Sign::Zero); }

constexpr Sign operator*(Sign a, Sign b) { return sign_of(to_int(a) * to_int(b)); }

/// Position of a sign in the order 0 < 1 < -1 used for sign conditions.
constexpr int lex_rank(Sign s) {
  switch (s) {
    case Sign::Zero: return 0;
    case Sign::Pos: return 1;
    case Sign::Neg: return 2;
  }
  return 0;
}

constexpr std::strong_ordering lex_compare(Sign a, Sign b) { return lex_rank(a) <=> lex_rank(b); }

inline constexpr Sign kSignsInLexOrder[3] = {Sign::Zero, Sign::Pos, Sign::Neg};

/// sign^exp with 0^0 = 1.
constexpr int power(Sign s, int exp) {
  if (exp == 0) return 1;
  const int v = to_int(s);
  return (exp % 2 == 0) ? v * v : v;
}

inline std::string to_string(Sign s) { return std::to_string(to_int(s)); }

}  // namespace signdet
