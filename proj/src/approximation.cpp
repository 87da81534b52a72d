#include "farey/approximation.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "farey/decimal.hpp"

namespace farey {

namespace {

Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? a - b : b - a; }

bool strictly_inside_unit(const Fraction& f) { return f.num() > 0 && f.num() < f.den(); }

[[noreturn]] void loop_cap_exceeded(const ApproximationOptions& options, ApproximationTrack partial) {
  throw ApproximationError("loop cap of " + std::to_string(options.max_loops) + " exceeded", std::move(partial));
}

}  // namespace

Target::Target(Rational v, Rational eps) : value(std::move(v)), epsilon(std::move(eps)) {
  if (value < 0 || value > 1) throw std::invalid_argument("target must lie in [0, 1]");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
}

Target Target::parse(std::string_view value, std::string_view epsilon) {
  Rational v = value.find('/') != std::string_view::npos ? Fraction::parse(value).value() : parse_decimal(value);
  return Target(std::move(v), parse_decimal(epsilon, true));
}

ApproximationTrack farey_approximate(const Target& target, const ApproximationOptions& options) {
  ApproximationTrack track;
  track.method = Method::farey;
  if (target.value == 0 || target.value == 1) {
    track.steps.emplace_back(numerator(target.value), BigInt(1));
    return track;
  }

  Fraction lo(0), hi(1);
  Fraction m = mediant(lo, hi);
  track.steps.push_back(m);
  while (abs_diff(m.value(), target.value) >= target.epsilon) {
    if (track.loop_count >= options.max_loops) loop_cap_exceeded(options, std::move(track));
    ++track.loop_count;
    if (m.value() > target.value) {
      hi = m;
    } else {
      lo = m;
    }
    m = mediant(lo, hi);
    track.steps.push_back(m);
  }
  return track;
}

CFResult cf_expand(const Target& target, const ApproximationOptions& options) {
  if (target.value <= 0 || target.value >= 1) {
    throw std::invalid_argument("continued fraction expansion needs 0 < target < 1");
  }
  CFResult result;
  ApproximationTrack& track = result.track;
  track.method = Method::continued_fraction;

  // Convergent recurrence over [a_0; a_1, ...]; a_0 = 0 here.
  BigInt h_prev = 1, h_prev2 = 0;
  BigInt k_prev = 0, k_prev2 = 1;

  Rational mod = 1;
  Rational rad = target.value;
  bool integer_part = true;
  while (mod >= target.epsilon) {
    BigInt c = 0;
    if (options.fast_division) {
      Rational ratio = rad / mod;
      c = numerator(ratio) / denominator(ratio);
      if (BigInt(track.loop_count) + c > options.max_loops) loop_cap_exceeded(options, std::move(track));
      track.loop_count += c.convert_to<std::uint64_t>();
    } else {
      while (rad - Rational(c) * mod >= mod) {
        if (track.loop_count >= options.max_loops) loop_cap_exceeded(options, std::move(track));
        ++track.loop_count;
        ++c;
        result.increments.emplace_back(c * h_prev + h_prev2, c * k_prev + k_prev2);
      }
    }
    Rational next_mod = rad - Rational(c) * mod;
    rad = std::move(mod);
    mod = std::move(next_mod);

    BigInt h = c * h_prev + h_prev2;
    BigInt k = c * k_prev + k_prev2;
    h_prev2 = std::exchange(h_prev, h);
    k_prev2 = std::exchange(k_prev, k);
    if (integer_part) {
      integer_part = false;
      continue;
    }
    result.expansion.coefficients.push_back(c);
    track.steps.emplace_back(h, k);
  }
  if (track.steps.empty()) track.steps.emplace_back(h_prev, k_prev);
  return result;
}

Fraction evaluate_cf(const CFExpansion& e) {
  if (e.coefficients.empty()) throw std::invalid_argument("empty continued fraction");
  Rational x = 0;
  for (auto it = e.coefficients.rbegin(); it != e.coefficients.rend(); ++it) {
    if (*it < 1) throw std::invalid_argument("partial quotients must be >= 1");
    x = 1 / (Rational(*it) + x);
  }
  return Fraction(numerator(x), denominator(x));
}

std::vector<Fraction> convergents(const CFExpansion& e) {
  if (e.coefficients.empty()) throw std::invalid_argument("empty continued fraction");
  std::vector<Fraction> out;
  BigInt h_prev = 0, h_prev2 = 1;
  BigInt k_prev = 1, k_prev2 = 0;
  for (const auto& a : e.coefficients) {
    if (a < 1) throw std::invalid_argument("partial quotients must be >= 1");
    BigInt h = a * h_prev + h_prev2;
    BigInt k = a * k_prev + k_prev2;
    h_prev2 = std::exchange(h_prev, h);
    k_prev2 = std::exchange(k_prev, k);
    out.emplace_back(h, k);
  }
  return out;
}

bool is_subsequence(const std::vector<Fraction>& needle, const std::vector<Fraction>& haystack) {
  auto it = haystack.begin();
  for (const auto& f : needle) {
    it = std::find(it, haystack.end(), f);
    if (it == haystack.end()) return false;
    ++it;
  }
  return true;
}

EquivalenceReport compare_tracks(const Target& target, const ApproximationOptions& options) {
  EquivalenceReport report;
  ApproximationOptions literal = options;
  literal.fast_division = false;
  report.farey = farey_approximate(target, literal);
  report.cf = cf_expand(target, literal);

  const BigInt& horizon = report.farey.steps.back().den();
  std::vector<Fraction> inside, within_horizon;
  for (const auto& c : report.cf.track.steps) {
    if (!strictly_inside_unit(c)) continue;
    inside.push_back(c);
    if (c.den() <= horizon) {
      within_horizon.push_back(c);
    } else {
      ++report.convergents_beyond_horizon;
    }
  }
  report.convergents_in_farey = is_subsequence(within_horizon, report.farey.steps);
  report.all_convergents_in_farey = is_subsequence(inside, report.farey.steps);

  std::vector<Fraction> increments;
  std::copy_if(report.cf.increments.begin(), report.cf.increments.end(), std::back_inserter(increments),
               strictly_inside_unit);
  const auto common = std::min(increments.size(), report.farey.steps.size());
  report.increments_match_farey =
      std::equal(increments.begin(), increments.begin() + static_cast<std::ptrdiff_t>(common),
                 report.farey.steps.begin());

  report.loop_difference =
      static_cast<std::int64_t>(report.cf.track.loop_count) - static_cast<std::int64_t>(report.farey.loop_count);
  report.farey_error = abs_diff(report.farey.steps.back().value(), target.value);
  report.cf_error = abs_diff(report.cf.track.steps.back().value(), target.value);
  return report;
}

FuzzSummary fuzz_compare(std::size_t count, std::uint64_t max_q, const Rational& epsilon, std::uint64_t seed,
                         const ApproximationOptions& options) {
  if (max_q < 2) throw std::invalid_argument("max_q must be at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_q(2, max_q);
  FuzzSummary summary;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t q = pick_q(rng);
    const std::uint64_t p = std::uniform_int_distribution<std::uint64_t>(1, q - 1)(rng);
    const Fraction f{BigInt(p), BigInt(q)};
    const auto report = compare_tracks(Target(f.value(), epsilon), options);
    if (!report.convergents_in_farey) ++summary.subsequence_failures;
    if (!report.increments_match_farey) ++summary.increment_mismatches;
    if (report.farey.steps.back() != f || report.cf.track.steps.back() != f) ++summary.inexact_endings;
    if (i == 0) {
      summary.min_loop_difference = summary.max_loop_difference = report.loop_difference;
    } else {
      summary.min_loop_difference = std::min(summary.min_loop_difference, report.loop_difference);
      summary.max_loop_difference = std::max(summary.max_loop_difference, report.loop_difference);
    }
    ++summary.targets;
  }
  return summary;
}

std::vector<Fraction> fibonacci_lucas_track(const NeighbourPair& seed, std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("steps must be at least 1");
  std::vector<Fraction> track{seed.lo(), seed.hi()};
  track.reserve(steps + 2);
  for (std::size_t i = 0; i < steps; ++i) {
    track.push_back(mediant(track[track.size() - 1], track[track.size() - 2]));
  }
  return track;
}

}  // namespace farey
