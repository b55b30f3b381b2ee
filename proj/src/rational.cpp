/*
 * Parsing for exact rational values written as "p" or "p/q".
 */

#include "vulnkit/rational.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace vulnkit {

namespace {

int64_t parse_int(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer in rational literal");
  }
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
  if (pos != text.size()) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
  return static_cast<int64_t>(value);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_int(text));
  }
  const int64_t num = parse_int(text.substr(0, slash));
  const int64_t den = parse_int(text.substr(slash + 1));
  return Rational(num, den);
}

}  // namespace vulnkit
