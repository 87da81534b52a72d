#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the library; everything runs on plain 64-bit integers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<std::uint64_t, std::uint64_t>;  // (p, q)

inline bool less_by_value(const Pair& a, const Pair& b) {
  return static_cast<unsigned __int128>(a.first) * b.second < static_cast<unsigned __int128>(b.first) * a.second;
}

inline Pair reduced(std::uint64_t p, std::uint64_t q) {
  if (p == 0) return {0, 1};
  std::uint64_t g = std::gcd(p, q);
  return {p / g, q / g};
}

/// Every reduced p/q with 0 <= p <= q <= n, sorted by value.
inline std::vector<Pair> farey(std::uint64_t n) {
  std::vector<Pair> out;
  for (std::uint64_t q = 1; q <= n; ++q) {
    for (std::uint64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end(), less_by_value);
  return out;
}

/// Tally of the standard trial: pairs (a, b) with a <= b <= kappa.
inline std::map<Pair, std::uint64_t> standard_tally(std::uint64_t kappa) {
  std::map<Pair, std::uint64_t> t;
  for (std::uint64_t b = 1; b <= kappa; ++b) {
    for (std::uint64_t a = 0; a <= b; ++a) ++t[reduced(a, b)];
  }
  return t;
}

/// phi(q) by counting.
inline std::uint64_t phi(std::uint64_t q) {
  std::uint64_t n = 0;
  for (std::uint64_t p = 1; p <= q; ++p) n += std::gcd(p, q) == 1;
  return n;
}

/// Partial quotients of p/q (0 < p < q) by Euclid's division, without the
/// integer part.
inline std::vector<std::uint64_t> euclid_cf(std::uint64_t p, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  std::uint64_t num = q, den = p;  // 1 / (p/q)
  while (den != 0) {
    out.push_back(num / den);
    std::uint64_t r = num % den;
    num = den;
    den = r;
  }
  return out;
}

/// The reduced fraction with the smallest denominator strictly inside
/// (lo, hi), by scanning denominators.
inline Pair simplest_between(Pair lo, Pair hi) {
  for (std::uint64_t q = 1;; ++q) {
    // smallest p with p/q > lo
    std::uint64_t p = lo.first * q / lo.second + 1;
    if (less_by_value({p, q}, hi)) return reduced(p, q);
  }
}

/// Stern-Brocot descent toward exact p/q driven only by simplest_between:
/// each step is the simplest fraction in the current open bracket.
inline std::vector<Pair> stern_brocot_path(Pair target) {
  std::vector<Pair> path;
  Pair lo{0, 1}, hi{1, 1};
  for (;;) {
    Pair m = simplest_between(lo, hi);
    path.push_back(m);
    if (m == target) return path;
    if (less_by_value(target, m)) {
      hi = m;
    } else {
      lo = m;
    }
  }
}

/// Convergents of p/q from its Euclid quotients, each evaluated by folding.
inline std::vector<Pair> euclid_convergents(std::uint64_t p, std::uint64_t q) {
  auto a = euclid_cf(p, q);
  std::vector<Pair> out;
  for (std::size_t len = 1; len <= a.size(); ++len) {
    // fold 1/(a1 + 1/(a2 + ... 1/a_len))
    std::uint64_t num = 1, den = a[len - 1];
    for (std::size_t i = len - 1; i-- > 0;) {
      // 1 / (a_i + num/den) = den / (a_i*den + num)
      std::uint64_t nn = den;
      std::uint64_t nd = a[i] * den + num;
      num = nn;
      den = nd;
    }
    out.push_back(reduced(num, den));
  }
  return out;
}

/// Random reduced fraction strictly inside (0, 1) with denominator <= max_q.
inline Pair random_inner(std::mt19937_64& rng, std::uint64_t max_q) {
  std::uint64_t q = std::uniform_int_distribution<std::uint64_t>(2, max_q)(rng);
  std::uint64_t p = std::uniform_int_distribution<std::uint64_t>(1, q - 1)(rng);
  return reduced(p, q);
}

}  // namespace oracle
