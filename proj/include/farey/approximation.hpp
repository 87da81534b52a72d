#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "farey/fraction.hpp"

namespace farey {

/// Exact target value in [0, 1] and a strictly positive tolerance.
struct Target {
  Rational value;
  Rational epsilon;

  /// Validates 0 <= value <= 1 and epsilon > 0.
  Target(Rational v, Rational eps);

  /// value accepts a plain decimal ("0.6180339887") or "p/q"; epsilon accepts
  /// a decimal with optional exponent ("1e-4").
  static Target parse(std::string_view value, std::string_view epsilon);
};

enum class Method { farey, continued_fraction };

struct ApproximationTrack {
  Method method = Method::farey;
  std::vector<Fraction> steps;
  /// The Loop counter exactly as the iteration keeps it: starts at 1 and
  /// gains one per mediant (Farey) or per unit increment of a partial
  /// quotient (continued fraction).
  std::uint64_t loop_count = 1;
};

/// Partial quotients a_1..a_N of 1/(a_1 + 1/(a_2 + ...)); the integer part
/// (always 0 on (0,1)) is not stored.
struct CFExpansion {
  std::vector<BigInt> coefficients;
};

struct ApproximationOptions {
  /// Upper bound on the Loop counter.
  std::uint64_t max_loops = 1'000'000;
  /// Compute each partial quotient by one division instead of repeated
  /// subtraction. Coefficients and Loop are identical; the per-increment
  /// track is not recorded.
  bool fast_division = false;
};

/// The loop cap was hit; carries everything produced so far.
class ApproximationError : public std::runtime_error {
 public:
  ApproximationError(const std::string& what, ApproximationTrack partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const ApproximationTrack& partial() const noexcept { return partial_; }

 private:
  ApproximationTrack partial_;
};

/// Stern-Brocot descent between 0/1 and 1/1. Each mediant is emitted; the
/// bracket endpoint on the mediant's side of the target is replaced, until a
/// mediant lands within epsilon. Targets 0 and 1 are hit by the endpoints
/// immediately.
ApproximationTrack farey_approximate(const Target& target, const ApproximationOptions& options = {});

struct CFResult {
  CFExpansion expansion;
  /// Convergent after each completed partial quotient.
  ApproximationTrack track;
  /// Value of the partial expansion after every unit increment, in order.
  /// Empty under fast_division.
  std::vector<Fraction> increments;
};

/// Continued fraction by repeated subtraction on exact rationals: the outer
/// loop runs while the remainder is at least epsilon, the inner loop peels
/// off whole multiples of the remainder one at a time. Requires 0 < value < 1.
CFResult cf_expand(const Target& target, const ApproximationOptions& options = {});

/// Exact value of a finite expansion. Throws std::invalid_argument when
/// empty or when a coefficient is < 1.
Fraction evaluate_cf(const CFExpansion& e);

/// Values of every non-empty prefix.
std::vector<Fraction> convergents(const CFExpansion& e);

struct EquivalenceReport {
  ApproximationTrack farey;
  CFResult cf;
  /// CF convergents in (0,1), up to the denominator reached by the Farey
  /// track, occur in order within the Farey track.
  bool convergents_in_farey = false;
  /// Same, without the horizon cut.
  bool all_convergents_in_farey = false;
  /// Number of convergents in (0,1) beyond the Farey track's last
  /// denominator (the two engines use different stopping rules).
  std::size_t convergents_beyond_horizon = 0;
  /// The per-increment CF values inside (0,1) and the Farey steps agree on
  /// their common prefix.
  bool increments_match_farey = false;
  std::int64_t loop_difference = 0;  ///< cf.loop_count - farey.loop_count
  Rational farey_error;
  Rational cf_error;
};

/// Both engines run in repeated-subtraction mode; fast_division is ignored.
EquivalenceReport compare_tracks(const Target& target, const ApproximationOptions& options = {});

struct FuzzSummary {
  std::size_t targets = 0;
  std::size_t subsequence_failures = 0;      ///< convergents_in_farey false
  std::size_t increment_mismatches = 0;      ///< increments_match_farey false
  std::size_t inexact_endings = 0;           ///< either engine did not end on the target
  std::int64_t min_loop_difference = 0;
  std::int64_t max_loop_difference = 0;
};

/// Runs compare_tracks on `count` random fractions p/q (1 <= p < q <= max_q,
/// then reduced) drawn from a mt19937_64 seeded with `seed`.
FuzzSummary fuzz_compare(std::size_t count, std::uint64_t max_q, const Rational& epsilon, std::uint64_t seed,
                         const ApproximationOptions& options = {});

/// Zigzag mediant iteration x_{n+1} = mediant(x_n, x_{n-1}) seeded with
/// (lo, hi); returns x_0 .. x_{steps+1}. Numerators and denominators each
/// follow a(n) = a(n-1) + a(n-2).
std::vector<Fraction> fibonacci_lucas_track(const NeighbourPair& seed, std::size_t steps);

/// True if `needle` occurs in order (not necessarily contiguously) in
/// `haystack`.
bool is_subsequence(const std::vector<Fraction>& needle, const std::vector<Fraction>& haystack);

}  // namespace farey
