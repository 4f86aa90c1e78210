#include "caterpillar/numbers.hpp"

#include <cassert>
#include <iomanip>
#include <sstream>

namespace caterpillar {

Real to_real(const BigInt& value) { return Real(value); }

Real to_real(const BigRat& value) {
  return Real(numerator(value)) / Real(denominator(value));
}

namespace {

std::string insert_point(std::string digits, int places, bool negative) {
  if (places > 0) {
    while (static_cast<int>(digits.size()) < places + 1)
      digits.insert(digits.begin(), '0');
    digits.insert(digits.size() - places, 1, '.');
  }
  if (negative && digits.find_first_not_of("0.") != std::string::npos)
    digits.insert(digits.begin(), '-');
  return digits;
}

// Round a plain fixed-point decimal string at `places` decimals, half-even.
std::string round_decimal_string(const std::string& s, int places) {
  bool negative = !s.empty() && s[0] == '-';
  std::string t = negative ? s.substr(1) : s;
  auto dot = t.find('.');
  std::string intpart = dot == std::string::npos ? t : t.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : t.substr(dot + 1);
  while (static_cast<int>(frac.size()) < places + 1) frac.push_back('0');

  std::string digits = intpart + frac.substr(0, places);
  std::string rest = frac.substr(places);
  bool round_up;
  if (rest[0] > '5') {
    round_up = true;
  } else if (rest[0] < '5') {
    round_up = false;
  } else if (rest.find_first_not_of('0', 1) != std::string::npos) {
    round_up = true;
  } else {
    // exact tie: round to even last kept digit
    round_up = !digits.empty() && ((digits.back() - '0') % 2 == 1);
  }
  if (round_up) {
    int i = static_cast<int>(digits.size()) - 1;
    for (; i >= 0; --i) {
      if (digits[i] == '9') {
        digits[i] = '0';
      } else {
        ++digits[i];
        break;
      }
    }
    if (i < 0) digits.insert(digits.begin(), '1');
  }
  return insert_point(digits, places, negative);
}

}  // namespace

std::string format_decimal(const BigRat& value, int places) {
  assert(places >= 0);
  BigInt num = numerator(value);
  BigInt den = denominator(value);  // > 0 by normalization
  bool negative = num < 0;
  if (negative) num = -num;
  for (int i = 0; i < places; ++i) num *= 10;
  BigInt q = num / den;
  BigInt r = num % den;
  BigInt twice = 2 * r;
  if (twice > den || (twice == den && q % 2 == 1)) ++q;
  return insert_point(q.str(), places, negative);
}

std::string format_decimal(const Real& value, int places) {
  assert(places >= 0);
  // 30 guard digits; a binary value only ties at the kept digit when those
  // are exactly 5000...0, which round_decimal_string resolves half-even.
  std::string s = value.str(places + 30, std::ios_base::fixed);
  return round_decimal_string(s, places);
}

std::string format_significant(const Real& value, int digits) {
  if (value == 0) return "0";
  std::ostringstream os;
  os << std::setprecision(digits) << value;
  std::string s = os.str();

  // iostreams trim trailing zeros; pad the mantissa back to `digits`
  // significant digits so columns keep a fixed width.
  auto epos = s.find_first_of("eE");
  std::string mantissa = epos == std::string::npos ? s : s.substr(0, epos);
  std::string exponent = epos == std::string::npos ? "" : s.substr(epos);
  int significant = 0;
  bool counting = false;
  for (char c : mantissa) {
    if (c >= '1' && c <= '9') counting = true;
    if (counting && c >= '0' && c <= '9') ++significant;
  }
  if (significant > 0 && significant < digits) {
    if (mantissa.find('.') == std::string::npos) mantissa.push_back('.');
    mantissa.append(digits - significant, '0');
  }
  return mantissa + exponent;
}

}  // namespace caterpillar
