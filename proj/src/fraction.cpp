#include "farey/fraction.hpp"

#include <stdexcept>
#include <utility>

namespace farey {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Boost reads a leading 0 as an octal prefix.
BigInt from_digits(std::string_view s) {
  auto first = s.find_first_not_of('0');
  return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(s.substr(first)));
}

}  // namespace

Fraction::Fraction(BigInt a, BigInt b) : p_(std::move(a)), q_(std::move(b)) {
  if (q_ == 0) throw std::invalid_argument("fraction denominator is zero");
  if (p_ < 0 || q_ < 0) throw std::invalid_argument("fraction must be non-negative");
  if (p_ == 0) {
    q_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(p_, q_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
  }
}

std::string Fraction::to_string() const { return p_.str() + "/" + q_.str(); }

Fraction Fraction::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_digits(text)) throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
    return Fraction(from_digits(text), BigInt(1));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
  }
  return Fraction(from_digits(num), from_digits(den));
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  BigInt lhs = a.p_ * b.q_;
  BigInt rhs = b.p_ * a.q_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Fraction reduce(const BigInt& a, const BigInt& b) { return Fraction(a, b); }

Fraction mediant(const Fraction& a, const Fraction& b) {
  return Fraction(a.num() + b.num(), a.den() + b.den());
}

bool are_neighbours(const Fraction& a, const Fraction& b) {
  BigInt det = a.den() * b.num() - a.num() * b.den();
  return det == 1 || det == -1;
}

Fraction symmetry_partner(const Fraction& f) {
  if (f.num() > f.den()) throw std::domain_error("symmetry partner needs p <= q, got " + f.to_string());
  return Fraction(f.den() - f.num(), f.den());
}

NeighbourPair::NeighbourPair(Fraction a, Fraction b) {
  if (!are_neighbours(a, b)) {
    throw std::invalid_argument(a.to_string() + " and " + b.to_string() + " are not neighbours");
  }
  if (b < a) std::swap(a, b);
  lo_ = std::move(a);
  hi_ = std::move(b);
}

std::string to_ratio_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace farey
