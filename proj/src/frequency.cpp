#include "farey/frequency.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

namespace farey {

namespace {

using Tally = std::unordered_map<std::uint64_t, std::uint64_t>;

constexpr std::uint64_t pack(std::uint64_t p, std::uint64_t q) { return (q << 32) | p; }
constexpr std::uint64_t unpack_p(std::uint64_t key) { return key & 0xffffffffu; }
constexpr std::uint64_t unpack_q(std::uint64_t key) { return key >> 32; }

void check_kappa(std::uint64_t kappa, const EnumerationOptions& options) {
  if (kappa == 0) throw std::invalid_argument("kappa must be at least 1");
  if (kappa > options.max_kappa) {
    throw ResourceLimitError("kappa " + std::to_string(kappa) + " exceeds the enumeration cap " +
                             std::to_string(options.max_kappa));
  }
  if (kappa >= (std::uint64_t{1} << 31)) {
    throw ResourceLimitError("kappa " + std::to_string(kappa) + " is too large to enumerate");
  }
}

unsigned resolve_workers(const EnumerationOptions& options, std::uint64_t kappa) {
  unsigned n = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  return static_cast<unsigned>(std::min<std::uint64_t>(n, kappa));
}

// Runs tally_row(b, tally) for every b in [1, kappa], rows dealt round-robin
// over the workers; private tallies are summed afterwards, so the result does
// not depend on the worker count.
template <typename Row>
Tally parallel_tally(std::uint64_t kappa, unsigned workers, Row tally_row) {
  std::vector<Tally> partial(workers);
  auto job = [&](unsigned w) {
    for (std::uint64_t b = 1 + w; b <= kappa; b += workers) tally_row(b, partial[w]);
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(job, w);
  }
  Tally merged = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) {
    for (const auto& [key, count] : partial[w]) merged[key] += count;
  }
  return merged;
}

std::vector<CensusEntry> freeze(const Tally& tally) {
  std::vector<std::uint64_t> keys;
  keys.reserve(tally.size());
  for (const auto& kv : tally) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end(), [](std::uint64_t x, std::uint64_t y) {
    using u128 = unsigned __int128;
    return u128(unpack_p(x)) * unpack_q(y) < u128(unpack_p(y)) * unpack_q(x);
  });
  std::vector<CensusEntry> entries;
  entries.reserve(keys.size());
  for (auto key : keys) {
    entries.push_back({Fraction(BigInt(unpack_p(key)), BigInt(unpack_q(key))), tally.at(key)});
  }
  return entries;
}

std::uint64_t to_u64(const BigInt& n) { return n.convert_to<std::uint64_t>(); }

}  // namespace

Census::Census(std::uint64_t kappa, TrialMode mode, std::vector<CensusEntry> entries)
    : kappa_(kappa), mode_(mode), entries_(std::move(entries)) {
  if (kappa_ == 0) throw std::invalid_argument("kappa must be at least 1");
}

BigInt Census::total_pairs() const {
  BigInt k = kappa_;
  return mode_ == TrialMode::standard ? k * (k + 3) / 2 : k * (k + 1);
}

BigInt Census::total_count() const {
  BigInt sum = 0;
  for (const auto& e : entries_) sum += e.t;
  return sum;
}

std::optional<std::uint64_t> Census::find(const Fraction& f) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), f,
                             [](const CensusEntry& e, const Fraction& x) { return e.fraction < x; });
  if (it == entries_.end() || it->fraction != f) return std::nullopt;
  return it->t;
}

FrequencyRecord Census::record(const CensusEntry& e) const {
  FrequencyRecord r;
  r.fraction = e.fraction;
  r.t = e.t;
  r.p_pct = Rational(BigInt(e.t), total_pairs());
  if (kappa_ > 1) r.t_norm = Rational(BigInt(e.t) - 1, BigInt(kappa_ - 1));
  r.rnf = mode_ == TrialMode::standard ? rnf(e.fraction) : counterpart_ordinate(e.fraction);
  return r;
}

std::vector<CensusEntry> Census::unit_interval() const {
  std::vector<CensusEntry> out;
  for (const auto& e : entries_) {
    if (e.fraction.num() <= e.fraction.den()) out.push_back(e);
  }
  return out;
}

Census enumerate_trial(std::uint64_t kappa, const EnumerationOptions& options) {
  check_kappa(kappa, options);
  auto tally = parallel_tally(kappa, resolve_workers(options, kappa), [](std::uint64_t q, Tally& t) {
    for (std::uint64_t p = 0; p <= q; ++p) {
      std::uint64_t g = std::gcd(p, q);
      ++t[pack(p / g, q / g)];
    }
  });
  return Census(kappa, TrialMode::standard, freeze(tally));
}

Census extended_trial(std::uint64_t kappa, const EnumerationOptions& options) {
  check_kappa(kappa, options);
  auto tally = parallel_tally(kappa, resolve_workers(options, kappa), [kappa](std::uint64_t b, Tally& t) {
    for (std::uint64_t a = 0; a <= kappa; ++a) {
      std::uint64_t g = std::gcd(a, b);
      ++t[pack(a / g, b / g)];
    }
  });
  return Census(kappa, TrialMode::extended, freeze(tally));
}

Census census_closed_form(std::uint64_t kappa) {
  if (kappa == 0) throw std::invalid_argument("kappa must be at least 1");
  std::vector<CensusEntry> entries;
  entries.reserve(distinct_count(kappa));
  for_each_farey(kappa, [&](std::uint64_t p, std::uint64_t q) {
    entries.push_back({Fraction(BigInt(p), BigInt(q)), kappa / q});
  });
  return Census(kappa, TrialMode::standard, std::move(entries));
}

Occurrence occurrence(const Fraction& f, std::uint64_t kappa) {
  if (f.num() > f.den() || f.den() > kappa) return {0, false};
  return {kappa / to_u64(f.den()), true};
}

Occurrence extended_occurrence(const Fraction& f, std::uint64_t kappa) {
  const BigInt& m = std::max(f.num(), f.den());
  if (m > kappa) return {0, false};
  return {kappa / to_u64(m), true};
}

Rational percentage(const Fraction& f, std::uint64_t kappa) {
  if (kappa == 0) throw std::invalid_argument("kappa must be at least 1");
  BigInt k = kappa;
  return Rational(2 * BigInt(occurrence(f, kappa).count), k * (k + 3));
}

Rational normalized(const Fraction& f, std::uint64_t kappa) {
  if (kappa < 2) throw std::domain_error("normalization is degenerate for kappa < 2");
  auto occ = occurrence(f, kappa);
  if (!occ.in_range) throw std::out_of_range(f.to_string() + " does not occur at kappa " + std::to_string(kappa));
  return Rational(BigInt(occ.count) - 1, BigInt(kappa - 1));
}

Rational rnf(const Fraction& f) { return Rational(BigInt(1), f.den()); }

void for_each_farey(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t)>& visit) {
  if (n == 0) throw std::invalid_argument("Farey order must be at least 1");
  std::uint64_t a = 0, b = 1, c = 1, d = n;
  visit(a, b);
  while (c <= n) {
    std::uint64_t k = (n + b) / d;
    std::uint64_t next_c = k * c - a;
    std::uint64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
    visit(a, b);
  }
}

std::vector<Fraction> farey_sequence(std::uint64_t n) {
  std::vector<Fraction> out;
  for_each_farey(n, [&](std::uint64_t p, std::uint64_t q) { out.emplace_back(BigInt(p), BigInt(q)); });
  return out;
}

std::vector<std::uint32_t> totients(std::uint64_t n) {
  std::vector<std::uint32_t> phi(n + 1, 0);
  std::vector<std::uint32_t> primes;
  if (n >= 1) phi[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (phi[i] == 0) {
      phi[i] = static_cast<std::uint32_t>(i - 1);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      std::uint64_t m = i * p;
      if (m > n) break;
      if (i % p == 0) {
        phi[m] = phi[i] * p;
        break;
      }
      phi[m] = phi[i] * (p - 1);
    }
  }
  return phi;
}

std::uint64_t distinct_count(std::uint64_t kappa) {
  if (kappa == 0) throw std::invalid_argument("kappa must be at least 1");
  auto phi = totients(kappa);
  return std::accumulate(phi.begin() + 1, phi.end(), std::uint64_t{1});
}

Fraction counterpart(const Fraction& f) {
  if (f.num() == 0) throw std::invalid_argument("0/1 has no counterpart");
  return Fraction(f.den(), f.num());
}

Rational counterpart_ordinate(const Fraction& f) {
  return Rational(BigInt(1), std::max(f.num(), f.den()));
}

std::vector<CensusEntry> top_by_rnf(std::uint64_t kappa, std::size_t n) {
  std::vector<CensusEntry> out;
  for (std::uint64_t q = 1; q <= kappa && out.size() < n; ++q) {
    for (std::uint64_t p = 0; p <= q && out.size() < n; ++p) {
      if (std::gcd(p, q) == 1) out.push_back({Fraction(BigInt(p), BigInt(q)), kappa / q});
    }
  }
  return out;
}

}  // namespace farey
