#include "signdet/cli/instance.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace signdet::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.';
  });
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  bool have_p0 = false;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'NAME: c0,c1,...'");
    const auto name = trim(line.substr(0, colon));
    if (!valid_name(name)) throw ParseError(line_no, "invalid polynomial name '" + std::string(name) + "'");
    if (!seen.insert(std::string(name)).second) throw ParseError(line_no, "duplicate name '" + std::string(name) + "'");

    std::vector<Rat> coeffs;
    std::string_view rest = line.substr(colon + 1);
    for (;;) {
      const auto comma = rest.find(',');
      const auto token = trim(rest.substr(0, comma));
      try {
        coeffs.push_back(parse_rat(token));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, std::string("malformed coefficient: ") + e.what());
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }

    Poly p(std::move(coeffs));
    if (name == "P0") {
      if (p.is_zero()) throw ParseError(line_no, "P0 is the zero polynomial");
      inst.p0 = std::move(p);
      have_p0 = true;
    } else {
      inst.names.emplace_back(name);
      inst.polys.push_back(std::move(p));
    }
  }
  if (!have_p0) throw ParseError(0, "missing P0");
  return inst;
}

std::string format_instance(const Instance& inst) {
  std::string out = "P0: " + to_coeff_string(inst.p0) + "\n";
  for (std::size_t i = 0; i < inst.polys.size(); ++i)
    out += inst.names[i] + ": " + to_coeff_string(inst.polys[i]) + "\n";
  return out;
}

}  // namespace signdet::cli
