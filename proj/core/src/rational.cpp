#include "signdet/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace signdet {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false))) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  // GMP rejects a leading '+'.
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Int numerator(n, 10);
  Int denominator = 1;
  if (slash != std::string_view::npos) {
    denominator = Int(std::string(den), 10);
    if (denominator == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rat q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(10); }

}  // namespace signdet
