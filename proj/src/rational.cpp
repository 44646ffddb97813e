#include "cfconv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cfconv {

Rat rat_from_string(const std::string& text) {
  auto bad = [&](const char* why) -> void {
    throw std::invalid_argument("invalid rational '" + text + "': " + why);
  };

  std::size_t begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) bad("empty");
  std::size_t end = text.find_last_not_of(" \t");
  const std::string s = text.substr(begin, end - begin + 1);

  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) bad("expected digits");
  if (i < s.size()) {
    if (s[i] != '/') bad("unexpected character");
    ++i;
    std::size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size()) bad("malformed denominator");
  }

  Rat value(s);
  if (sgn(value.get_den()) == 0) bad("zero denominator");
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

}  // namespace cfconv
