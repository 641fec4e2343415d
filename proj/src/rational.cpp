#include "popmatch/rational.hpp"

#include <stdexcept>

namespace popmatch {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

std::string rational_to_string(const Rational& value) {
  BigInt num = numerator(value);
  BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
    return Rational(BigInt(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  BigInt d(den);
  if (d <= 0) {
    throw std::invalid_argument("rational '" + text +
                                "' must have a positive denominator");
  }
  return Rational(BigInt(num), d);
}

}  // namespace popmatch
