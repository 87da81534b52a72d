#include "farey/decimal.hpp"

#include <algorithm>
#include <stdexcept>

namespace farey {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigInt round_half_even(const Rational& r) {
  const BigInt& n = numerator(r);
  const BigInt& d = denominator(r);
  BigInt q = n / d;
  BigInt rem2 = 2 * (n - q * d);
  if (rem2 > d || (rem2 == d && (q & 1) != 0)) ++q;
  return q;
}

// Inserts a decimal point so that `decimals` digits follow it.
std::string place_point(std::string digits, unsigned decimals) {
  if (decimals == 0) return digits;
  if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
  digits.insert(digits.size() - decimals, 1, '.');
  return digits;
}

void trim_fraction_zeros(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
}

}  // namespace

BigInt pow10(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view text, bool allow_exponent) {
  const std::string original(text);
  auto fail = [&]() -> Rational { throw std::invalid_argument("not a finite decimal: '" + original + "'"); };

  long long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    if (!allow_exponent) return fail();
    auto exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    bool negative = false;
    if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
      negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || exp_text.size() > 6) return fail();
    for (char c : exp_text) {
      if (c < '0' || c > '9') return fail();
      exponent = exponent * 10 + (c - '0');
    }
    if (negative) exponent = -exponent;
  }
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);

  std::string digits;
  unsigned fraction_digits = 0;
  bool seen_point = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) return fail();
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  // Boost reads a leading 0 as an octal prefix.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));

  Rational value(BigInt(digits), pow10(fraction_digits));
  if (exponent > 0) value *= pow10(static_cast<unsigned>(exponent));
  if (exponent < 0) value /= pow10(static_cast<unsigned>(-exponent));
  return value;
}

std::string to_fixed(const Rational& r, unsigned decimals) {
  if (r < 0) {
    std::string s = to_fixed(-r, decimals);
    return s.find_first_not_of("0.") == std::string::npos ? s : "-" + s;
  }
  BigInt scaled = round_half_even(r * pow10(decimals));
  return place_point(scaled.str(), decimals);
}

std::string to_general(const Rational& r, unsigned significant) {
  if (significant == 0) significant = 1;
  if (r == 0) return "0";
  if (r < 0) return "-" + to_general(-r, significant);

  // 10^e <= r < 10^(e+1)
  long long e = static_cast<long long>(numerator(r).str().size()) -
                static_cast<long long>(denominator(r).str().size());
  auto power = [](long long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned>(k))) : Rational(BigInt(1), pow10(static_cast<unsigned>(-k)));
  };
  while (power(e) > r) --e;
  while (power(e + 1) <= r) ++e;

  const long long shift = static_cast<long long>(significant) - 1 - e;
  BigInt mantissa = round_half_even(r * power(shift));
  if (mantissa >= pow10(significant)) {
    mantissa /= 10;
    ++e;
  }
  std::string digits = mantissa.str();

  if (e < -4 || e >= static_cast<long long>(significant)) {
    std::string out = place_point(digits, significant - 1);
    trim_fraction_zeros(out);
    std::string exp = std::to_string(e < 0 ? -e : e);
    if (exp.size() < 2) exp.insert(0, "0");
    return out + (e < 0 ? "e-" : "e+") + exp;
  }
  const long long decimals = static_cast<long long>(significant) - 1 - e;
  std::string out = place_point(digits, static_cast<unsigned>(decimals));
  trim_fraction_zeros(out);
  return out;
}

}  // namespace farey
