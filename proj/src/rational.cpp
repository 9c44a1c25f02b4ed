#include "noncross/rational.hpp"

#include <cctype>

namespace noncross {

std::optional<Rat> parse_decimal(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  Int mant = 0;
  long frac_digits = 0;
  bool any_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    mant = mant * 10 + (s[i] - '0');
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      mant = mant * 10 + (s[i] - '0');
      ++frac_digits;
      any_digit = true;
    }
  }
  if (!any_digit) return std::nullopt;
  long expo = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) return std::nullopt;
    long e = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      e = e * 10 + (s[i] - '0');
      if (e > 100000) return std::nullopt;
    }
    expo = eneg ? -e : e;
  }
  if (i != s.size()) return std::nullopt;
  long p = expo - frac_digits;
  Int num = neg ? Int(-mant) : mant;
  Int den = 1;
  if (p >= 0) {
    for (long k = 0; k < p; ++k) num *= 10;
  } else {
    for (long k = 0; k < -p; ++k) den *= 10;
  }
  return Rat(num, den);
}

std::string format_exact(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  // strip factors of 2 and 5 from den; if 1 remains we can print a finite decimal
  Int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return num.str() + "/" + den.str();
  int shift = std::max(twos, fives);
  Int scaled = num;
  for (int k = 0; k < shift - twos; ++k) scaled *= 2;
  for (int k = 0; k < shift - fives; ++k) scaled *= 5;
  // value = scaled / 10^shift
  bool neg = scaled < 0;
  Int a = neg ? Int(-scaled) : scaled;
  std::string digits = a.str();
  std::string out;
  if (shift == 0) {
    out = digits;
  } else {
    if (static_cast<long>(digits.size()) <= shift)
      digits.insert(digits.begin(), shift + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - shift) + "." + digits.substr(digits.size() - shift);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

Int rat_round_nearest(const Rat& r) {
  // floor(r + 1/2): ties go to the upper value minus... floor semantics give
  // ties toward +inf; we want deterministic, so floor(2r+1)/2 style:
  Rat shifted = r + Rat(1, 2);
  Int f = rat_floor(shifted);
  if (Rat(f) == shifted) --f;  // exact tie: round down
  return f;
}

}  // namespace noncross
