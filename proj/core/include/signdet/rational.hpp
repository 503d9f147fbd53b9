#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace signdet {

/// Exact rational number. mpq_class keeps values canonical (positive
/// denominator, reduced) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "a" or "a/b" (optional sign on a). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& q);

inline int sgn(const Rat& q) { return ::sgn(q); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace signdet
