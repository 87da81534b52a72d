#include "farey/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "farey/frequency.hpp"

namespace farey {

namespace {

// (a, n) with a * n == m, a >= 2, n >= 1; ascending in n.
std::vector<std::pair<BigInt, BigInt>> factor_pairs(const BigInt& m) {
  std::vector<std::pair<BigInt, BigInt>> out;
  if (m < 2) return out;
  for (BigInt n = 1; n * 2 <= m; ++n) {
    if (m % n == 0) out.emplace_back(m / n, n);
  }
  return out;
}

}  // namespace

GraphPoint::GraphPoint(Fraction f) : x(f.value()), y(Rational(BigInt(1), f.den())), source(std::move(f)) {}

std::vector<GraphPoint> graph_points(std::uint64_t kappa) {
  std::vector<GraphPoint> out;
  for_each_farey(kappa, [&](std::uint64_t p, std::uint64_t q) { out.emplace_back(Fraction(BigInt(p), BigInt(q))); });
  return out;
}

CollinearResult collinear_through(const Anchor& anchor, const std::vector<GraphPoint>& points) {
  CollinearResult result;
  std::map<Rational, std::vector<GraphPoint>> by_slope;
  for (const auto& pt : points) {
    if (pt.x == anchor.x) {
      if (pt.y != anchor.y) result.vertical.push_back(pt);
      continue;
    }
    by_slope[(pt.y - anchor.y) / (pt.x - anchor.x)].push_back(pt);
  }
  auto by_x = [](const GraphPoint& a, const GraphPoint& b) { return a.x < b.x; };
  for (auto& [slope, members] : by_slope) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), by_x);
    result.groups.push_back({anchor, slope, std::move(members)});
  }
  std::sort(result.vertical.begin(), result.vertical.end(), by_x);
  return result;
}

CategoryAReport classify_category_a(std::uint64_t kappa) {
  if (kappa < 2) throw std::invalid_argument("category A needs kappa >= 2");
  auto points = graph_points(kappa);
  CategoryAReport report;
  report.groups = collinear_through(Anchor::origin(), points).groups;

  // Expected membership: numerator n on the slope-1/n line.
  std::map<BigInt, std::size_t> per_numerator;
  for (const auto& pt : points) {
    if (pt.source.num() > 0) ++per_numerator[pt.source.num()];
  }
  bool ok = true;
  std::size_t grouped = 0;
  for (const auto& g : report.groups) {
    if (numerator(g.slope) != 1) {
      ok = false;
      continue;
    }
    const BigInt n = denominator(g.slope);
    ok = ok && per_numerator[n] == g.members.size() &&
         std::all_of(g.members.begin(), g.members.end(), [&](const GraphPoint& m) { return m.source.num() == n; });
    grouped += g.members.size();
  }
  std::size_t expected = 0;
  for (const auto& [n, count] : per_numerator) {
    if (count >= 2) expected += count;
  }
  report.numerator_characterization = ok && grouped == expected;
  return report;
}

CategoryBReport classify_category_b(std::uint64_t kappa) {
  if (kappa < 3) throw std::invalid_argument("category B needs kappa >= 3");
  CategoryBReport report;
  report.groups = collinear_through(Anchor::unit(), graph_points(kappa)).groups;

  bool ok = true;
  for (const auto& g : report.groups) {
    for (const auto& m : g.members) {
      const BigInt& p = m.source.num();
      const BigInt& q = m.source.den();
      ok = ok && g.slope == Rational(q - 1, q - p);
    }
    if (denominator(g.slope) == 1) {
      IntegerSlope s;
      s.slope = numerator(g.slope);
      s.members = g.members.size();
      s.plus_forms = factor_pairs(s.slope - 1);
      s.minus_forms = factor_pairs(s.slope + 1);
      report.integer_slopes.push_back(std::move(s));
    }
  }
  report.slope_characterization = ok;
  return report;
}

CollinearResult sub_category(const Anchor& anchor, std::uint64_t kappa, std::uint64_t first_level,
                             std::uint64_t last_level) {
  if (first_level == 0 || first_level > last_level || last_level > kappa) {
    throw std::invalid_argument("sub-category levels must satisfy 1 <= first <= last <= kappa");
  }
  std::vector<GraphPoint> band;
  for (auto& pt : graph_points(kappa)) {
    if (pt.source.den() >= first_level && pt.source.den() <= last_level) band.push_back(std::move(pt));
  }
  return collinear_through(anchor, band);
}

}  // namespace farey
