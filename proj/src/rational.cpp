#include "permspec/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace permspec {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::int64_t parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer in rational literal");
  std::size_t pos = 0;
  long long v;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' in rational literal");
  }
  if (pos != s.size()) throw ParseError("bad integer '" + s + "' in rational literal");
  return v;
}

Rational pow10(int k) {
  Rational r(1);
  Rational ten(10);
  for (int i = 0; i < k; ++i) r *= ten;
  return r;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::int64_t num = parse_int(s.substr(0, slash));
    std::int64_t den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
  }

  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }

  __int128 mantissa = 0;
  int frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw ParseError("bad rational literal '" + s + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > static_cast<__int128>(INT64_MAX))
        throw ArithmeticOverflowError("rational literal too large: '" + s + "'");
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw ParseError("bad rational literal '" + s + "'");
    }
  }
  if (!seen_digit) throw ParseError("bad rational literal '" + s + "'");

  int exponent = 0;
  if (i < s.size()) {  // at 'e' or 'E'
    exponent = static_cast<int>(parse_int(s.substr(i + 1)));
    if (exponent > 30 || exponent < -30)
      throw ArithmeticOverflowError("rational literal exponent out of range: '" + s + "'");
  }

  Rational r(static_cast<std::int64_t>(mantissa), 1);
  int net = exponent - frac_digits;
  if (net > 0)
    r *= pow10(net);
  else if (net < 0)
    r /= pow10(-net);
  return negative ? -r : r;
}

}  // namespace permspec
