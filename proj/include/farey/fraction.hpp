#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace farey {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

/// A reduced non-negative rational p/q with gcd(p, q) = 1 and q >= 1.
///
/// Every constructor goes through reduction, so two Fractions compare equal
/// exactly when their numerators and denominators match. Ordering is by
/// cross-multiplication and never touches floating point.
class Fraction {
 public:
  Fraction() : p_(0), q_(1) {}

  /// Reduces a/b. Throws std::invalid_argument if b == 0 or either side is
  /// negative.
  Fraction(BigInt a, BigInt b);

  template <std::integral I>
  explicit Fraction(I n) : Fraction(BigInt(n), BigInt(1)) {}

  const BigInt& num() const noexcept { return p_; }
  const BigInt& den() const noexcept { return q_; }

  Rational value() const { return Rational(p_, q_); }

  /// "p/q" with no spaces.
  std::string to_string() const;

  /// Accepts "p/q" or a bare integer "n". Whitespace is not allowed.
  static Fraction parse(std::string_view text);

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  BigInt p_;
  BigInt q_;
};

/// gcd(0, b) is b, so every 0/b canonicalizes to 0/1.
Fraction reduce(const BigInt& a, const BigInt& b);

/// The Freshman sum (p1+p2)/(q1+q2), reduced. For neighbours the reduction is
/// a no-op and the result lies strictly between the two arguments.
Fraction mediant(const Fraction& a, const Fraction& b);

/// |q1*p2 - p1*q2| == 1.
bool are_neighbours(const Fraction& a, const Fraction& b);

/// (q-p)/q, the mirror image about x = 1/2. Requires p <= q.
Fraction symmetry_partner(const Fraction& f);

/// Two fractions with lo < hi and unit determinant.
class NeighbourPair {
 public:
  /// Orders the arguments; throws std::invalid_argument if they are not
  /// neighbours.
  NeighbourPair(Fraction a, Fraction b);

  const Fraction& lo() const noexcept { return lo_; }
  const Fraction& hi() const noexcept { return hi_; }

  /// The mediant of the pair.
  Fraction split() const { return mediant(lo_, hi_); }

 private:
  Fraction lo_;
  Fraction hi_;
};

/// "num/den" for an arbitrary exact rational (always with a denominator).
std::string to_ratio_string(const Rational& r);

}  // namespace farey
