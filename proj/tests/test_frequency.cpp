#include <cmath>
#include <numbers>

#include "doctest.h"
#include "farey/frequency.hpp"
#include "oracles.hpp"

using namespace farey;

namespace {

Fraction fr(std::uint64_t p, std::uint64_t q) { return Fraction(BigInt(p), BigInt(q)); }

std::vector<CensusEntry> entries_of(const Census& c) { return {c.entries().begin(), c.entries().end()}; }

}  // namespace

TEST_CASE("enumerate_trial small kappa") {
  auto c3 = enumerate_trial(3);
  REQUIRE(c3.size() == 5);
  std::vector<CensusEntry> expected{{fr(0, 1), 3}, {fr(1, 3), 1}, {fr(1, 2), 1}, {fr(2, 3), 1}, {fr(1, 1), 3}};
  CHECK(entries_of(c3) == expected);
  CHECK(c3.total_count() == 9);
  CHECK(c3.total_pairs() == 9);

  auto c1 = enumerate_trial(1);
  std::vector<CensusEntry> expected1{{fr(0, 1), 1}, {fr(1, 1), 1}};
  CHECK(entries_of(c1) == expected1);
}

TEST_CASE("enumerate_trial matches the brute tally") {
  for (std::uint64_t k : {2u, 7u, 30u, 64u}) {
    auto census = enumerate_trial(k);
    auto tally = oracle::standard_tally(k);
    REQUIRE(census.size() == tally.size());
    for (const auto& e : census.entries()) {
      auto key = oracle::Pair{e.fraction.num().convert_to<std::uint64_t>(), e.fraction.den().convert_to<std::uint64_t>()};
      CHECK(tally.at(key) == e.t);
    }
  }
}

TEST_CASE("enumerate_trial table value at kappa 4000") {
  auto census = enumerate_trial(4000, {kDefaultMaxKappa, 0});
  CHECK(census.find(fr(1, 7)) == 571u);
  CHECK(census.find(fr(1, 2)) == 2000u);
  CHECK(census.total_count() == census.total_pairs());
}

TEST_CASE("enumerate_trial is independent of the worker count") {
  auto serial = enumerate_trial(97, {kDefaultMaxKappa, 1});
  for (unsigned w : {2u, 3u, 8u}) CHECK(entries_of(enumerate_trial(97, {kDefaultMaxKappa, w})) == entries_of(serial));
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_trial(11, {10, 1}), ResourceLimitError);
  CHECK_THROWS_AS(extended_trial(11, {10, 1}), ResourceLimitError);
  CHECK_NOTHROW(enumerate_trial(10, {10, 1}));
  CHECK_THROWS_AS(enumerate_trial(0), std::invalid_argument);
}

TEST_CASE("occurrence") {
  CHECK(occurrence(fr(1, 2), 4000).count == 2000);
  CHECK(occurrence(fr(1, 9), 4000).count == 444);
  CHECK(occurrence(fr(0, 1), 123).count == 123);
  auto out = occurrence(fr(1, 11), 10);
  CHECK(out.count == 0);
  CHECK_FALSE(out.in_range);
  CHECK(occurrence(fr(1, 10), 10).in_range);
  CHECK_FALSE(occurrence(fr(3, 2), 10).in_range);
}

TEST_CASE("closed form equals enumeration, symmetric, monotone in q") {
  for (std::uint64_t k = 1; k <= 120; ++k) {
    auto census = enumerate_trial(k);
    REQUIRE(census.size() == distinct_count(k));
    for (const auto& e : census.entries()) {
      CHECK(occurrence(e.fraction, k).count == e.t);
      CHECK(occurrence(symmetry_partner(e.fraction), k).count == e.t);
    }
    for (std::uint64_t q = 1; q < k; ++q) CHECK(occurrence(fr(1, q), k).count >= occurrence(fr(1, q + 1), k).count);
  }
}

TEST_CASE("census_closed_form equals the enumerated census") {
  for (std::uint64_t k : {1u, 2u, 5u, 50u, 211u}) CHECK(entries_of(census_closed_form(k)) == entries_of(enumerate_trial(k)));
}

TEST_CASE("percentage") {
  CHECK(percentage(fr(1, 1), 10) == Rational(10, 65));
  CHECK(percentage(fr(1, 3), 100) == Rational(66, 10300));
  CHECK(percentage(fr(1, 4), 3000) == Rational(1500, 9009000));
  CHECK(percentage(fr(1, 11), 10) == 0);
}

TEST_CASE("percentages of a census sum to one exactly") {
  for (std::uint64_t k : {1u, 2u, 9u, 100u}) {
    auto census = census_closed_form(k);
    Rational sum = 0;
    for (const auto& r : census.records()) sum += r.p_pct;
    CHECK(sum == 1);
    CHECK(census.total_count() == BigInt(k) * (k + 3) / 2);
  }
}

TEST_CASE("normalized") {
  CHECK(normalized(fr(0, 1), 50) == 1);
  CHECK(normalized(fr(1, 50), 50) == 0);
  CHECK(normalized(fr(1, 2), 4000) == Rational(1999, 3999));
  CHECK_THROWS_AS(normalized(fr(0, 1), 1), std::domain_error);
  CHECK_THROWS_AS(normalized(fr(1, 60), 50), std::out_of_range);
}

TEST_CASE("rnf") {
  CHECK(rnf(fr(2, 5)) == Rational(1, 5));
  CHECK(rnf(fr(0, 1)) == 1);
  CHECK(rnf(fr(7, 10)) == Rational(1, 10));
}

TEST_CASE("records stay in [0,1] and approach rnf") {
  for (std::uint64_t k : {100u, 250u, 600u}) {
    auto census = census_closed_form(k);
    for (const auto& r : census.records()) {
      REQUIRE(r.t_norm.has_value());
      CHECK(*r.t_norm >= 0);
      CHECK(*r.t_norm <= 1);
      CHECK(r.rnf == Rational(BigInt(1), r.fraction.den()));
      Rational diff = *r.t_norm - r.rnf;
      if (diff < 0) diff = -diff;
      CHECK(diff < Rational(2, k));
    }
  }
  auto one = census_closed_form(1);
  CHECK_FALSE(one.record(one.entries()[0]).t_norm.has_value());
}

TEST_CASE("farey_sequence") {
  auto str = [](std::uint64_t n) {
    std::string s;
    for (const auto& f : farey_sequence(n)) s += (s.empty() ? "" : " ") + f.to_string();
    return s;
  };
  CHECK(str(1) == "0/1 1/1");
  CHECK(str(2) == "0/1 1/2 1/1");
  CHECK(str(3) == "0/1 1/3 1/2 2/3 1/1");
  CHECK(str(4) == "0/1 1/4 1/3 1/2 2/3 3/4 1/1");
  CHECK_THROWS(farey_sequence(0));
}

TEST_CASE("farey_sequence equals the sorted brute-force set and has neighbour adjacency") {
  for (std::uint64_t n = 1; n <= 80; ++n) {
    auto seq = farey_sequence(n);
    auto ref = oracle::farey(n);
    REQUIRE(seq.size() == ref.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      CHECK(seq[i] == fr(ref[i].first, ref[i].second));
      if (i + 1 < seq.size()) CHECK(are_neighbours(seq[i], seq[i + 1]));
    }
  }
}

TEST_CASE("distinct_count") {
  CHECK(distinct_count(1) == 2);
  CHECK(distinct_count(3) == 5);
  CHECK(distinct_count(4) == 7);
  CHECK(distinct_count(1000) == 304193);
  const double ratio = 304193.0 * std::numbers::pi * std::numbers::pi / 3e6;
  CHECK(std::abs(ratio - 1) < 0.002);

  auto phi = totients(400);
  std::uint64_t running = 1;
  for (std::uint64_t q = 1; q <= 400; ++q) {
    CHECK(phi[q] == oracle::phi(q));
    running += oracle::phi(q);
    CHECK(distinct_count(q) == running);
  }
}

TEST_CASE("extended_trial") {
  auto c2 = extended_trial(2);
  std::vector<CensusEntry> expected{{fr(0, 1), 2}, {fr(1, 2), 1}, {fr(1, 1), 2}, {fr(2, 1), 1}};
  CHECK(entries_of(c2) == expected);
  CHECK(c2.total_count() == 6);
  CHECK(c2.total_pairs() == 6);

  auto c1000 = extended_trial(1000, {kDefaultMaxKappa, 0});
  CHECK(c1000.find(fr(3, 2)) == 333u);
  CHECK(c1000.find(fr(1, 1)) == 1000u);
  CHECK(c1000.total_count() == c1000.total_pairs());
}

TEST_CASE("extended census restricted to [0,1] is the standard census") {
  for (std::uint64_t k : {1u, 2u, 17u, 100u}) CHECK(extended_trial(k).unit_interval() == entries_of(enumerate_trial(k)));
}

// The extended closed form is only trusted because of this check.
TEST_CASE("extended_occurrence agrees with enumeration up to kappa 300") {
  for (std::uint64_t k = 1; k <= 300; k += (k < 40 ? 1 : 13)) {
    auto census = extended_trial(k, {kDefaultMaxKappa, 0});
    for (const auto& e : census.entries()) CHECK(extended_occurrence(e.fraction, k).count == e.t);
  }
  CHECK_FALSE(extended_occurrence(fr(11, 2), 10).in_range);
}

TEST_CASE("counterpart") {
  CHECK(counterpart(fr(2, 5)) == fr(5, 2));
  CHECK(counterpart_ordinate(fr(2, 5)) == Rational(1, 5));
  CHECK(counterpart_ordinate(fr(5, 2)) == Rational(1, 5));
  CHECK(counterpart(fr(1, 1)) == fr(1, 1));
  CHECK(counterpart(fr(1, 3)) == fr(3, 1));
  CHECK(counterpart_ordinate(fr(1, 3)) == Rational(1, 3));
  CHECK_THROWS_AS(counterpart(fr(0, 1)), std::invalid_argument);
}

TEST_CASE("extended records use the counterpart ordinate") {
  auto census = extended_trial(20);
  for (const auto& r : census.records()) {
    CHECK(r.rnf == counterpart_ordinate(r.fraction));
    if (r.fraction.num() > 0) {
      CHECK(census.find(counterpart(r.fraction)) == r.t);
    }
  }
}

TEST_CASE("top_by_rnf") {
  auto top = top_by_rnf(4000, 33);
  REQUIRE(top.size() == 33);
  CHECK(top.front().fraction == fr(0, 1));
  CHECK(top.front().t == 4000);
  CHECK(top.back().fraction == fr(9, 10));
  CHECK(top.back().t == 400);
  CHECK(top_by_rnf(3, 100).size() == 5);
}
