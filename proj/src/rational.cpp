#include "mcover/rational.hpp"

#include <cctype>

#include "mcover/errors.hpp"

namespace mcover {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ContractError("empty rational literal");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ContractError("bad rational literal '" + std::string(text) + "'");
    BigInt p(std::string(num));
    BigInt q(std::string(den));
    if (q == 0)
      throw ContractError("zero denominator in '" + std::string(text) + "'");
    value = Rational(p, q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw ContractError("bad rational literal '" + std::string(text) + "'");
    BigInt p = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt q = 1;
    for (char c : frac) {
      p = p * 10 + (c - '0');
      q *= 10;
    }
    value = Rational(p, q);
  } else {
    if (!all_digits(s))
      throw ContractError("bad rational literal '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(s)));
  }
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

}  // namespace mcover
