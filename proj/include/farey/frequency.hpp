#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <vector>

#include "farey/fraction.hpp"

namespace farey {

/// Standard trial: pairs (a, b) with a <= b <= kappa. Extended trial: pairs
/// with a <= kappa and 1 <= b <= kappa, i.e. fractions on [0, kappa].
enum class TrialMode { standard, extended };

/// Thrown when an enumeration would exceed the configured kappa cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaxKappa = 10000;

struct EnumerationOptions {
  std::uint64_t max_kappa = kDefaultMaxKappa;
  /// Number of threads splitting the denominator range. 0 picks
  /// std::thread::hardware_concurrency().
  unsigned workers = 1;
};

/// One census row. t_norm is absent when kappa == 1, where max(T) == min(T).
struct FrequencyRecord {
  Fraction fraction;
  std::uint64_t t = 0;
  Rational p_pct;
  std::optional<Rational> t_norm;
  Rational rnf;
};

struct CensusEntry {
  Fraction fraction;
  std::uint64_t t = 0;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// Frozen tally of a trial: one entry per distinct reduced fraction, sorted by
/// value. Derived statistics are computed on demand from (fraction, t).
class Census {
 public:
  Census(std::uint64_t kappa, TrialMode mode, std::vector<CensusEntry> entries);

  std::uint64_t kappa() const noexcept { return kappa_; }
  TrialMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const CensusEntry> entries() const noexcept { return entries_; }

  /// Number of (a, b) pairs in the trial: kappa(kappa+3)/2 standard,
  /// kappa(kappa+1) extended.
  BigInt total_pairs() const;

  /// Sum of t over all entries; equals total_pairs() for a complete census.
  BigInt total_count() const;

  /// Tally for f, or nullopt if f never occurred.
  std::optional<std::uint64_t> find(const Fraction& f) const;

  FrequencyRecord record(const CensusEntry& e) const;

  auto records() const {
    return entries_ | std::views::transform([this](const CensusEntry& e) { return record(e); });
  }

  /// Restriction to fractions in [0, 1].
  std::vector<CensusEntry> unit_interval() const;

 private:
  std::uint64_t kappa_;
  TrialMode mode_;
  std::vector<CensusEntry> entries_;
};

/// Brute-force trial: visits every (a, b), reduces, tallies. Never uses the
/// closed form. Throws ResourceLimitError if kappa > options.max_kappa.
Census enumerate_trial(std::uint64_t kappa, const EnumerationOptions& options = {});

/// Brute-force extended trial over [0, kappa].
Census extended_trial(std::uint64_t kappa, const EnumerationOptions& options = {});

/// Closed-form census: walks the Farey sequence of order kappa and assigns
/// floor(kappa/q) to each fraction.
Census census_closed_form(std::uint64_t kappa);

struct Occurrence {
  std::uint64_t count = 0;
  /// False when f cannot occur in the trial (q > kappa or f > 1).
  bool in_range = true;
};

/// floor(kappa / q) for a reduced fraction in [0, 1].
Occurrence occurrence(const Fraction& f, std::uint64_t kappa);

/// Closed form for the extended trial: floor(kappa / max(p, q)).
Occurrence extended_occurrence(const Fraction& f, std::uint64_t kappa);

/// 2 T / (kappa (kappa + 3)).
Rational percentage(const Fraction& f, std::uint64_t kappa);

/// (T - 1) / (kappa - 1). Throws std::domain_error for kappa == 1 and
/// std::out_of_range when f does not occur.
Rational normalized(const Fraction& f, std::uint64_t kappa);

/// The kappa -> infinity limit of normalized(): 1/q.
Rational rnf(const Fraction& f);

/// Farey sequence F_n in increasing order.
std::vector<Fraction> farey_sequence(std::uint64_t n);

/// Streams F_n as raw (p, q) pairs without materializing Fractions.
void for_each_farey(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t)>& visit);

/// |F_kappa| = 1 + sum_{q <= kappa} phi(q), via a linear totient sieve.
std::uint64_t distinct_count(std::uint64_t kappa);

/// Euler's phi for 0..n from a linear sieve.
std::vector<std::uint32_t> totients(std::uint64_t n);

/// The reciprocal q/p; the pair shares the ordinate 1/max(p, q). Throws
/// std::invalid_argument for p == 0.
Fraction counterpart(const Fraction& f);

/// Shared ordinate of f and counterpart(f): 1/max(p, q).
Rational counterpart_ordinate(const Fraction& f);

/// The n highest-RNF fractions at kappa (ties by value), with their closed
/// form counts. Stops as soon as n are collected, so cost is independent of
/// kappa.
std::vector<CensusEntry> top_by_rnf(std::uint64_t kappa, std::size_t n);

}  // namespace farey
