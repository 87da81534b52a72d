#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "farey/fraction.hpp"

namespace farey {

/// A census fraction placed at (p/q, 1/q): value against RNF.
struct GraphPoint {
  Rational x;
  Rational y;
  Fraction source;

  explicit GraphPoint(Fraction f);
};

struct Anchor {
  Rational x;
  Rational y;

  static Anchor origin() { return {0, 0}; }
  static Anchor unit() { return {1, 1}; }
  friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct LineGroup {
  Anchor anchor;
  Rational slope;
  std::vector<GraphPoint> members;  // ascending by x
};

struct CollinearResult {
  std::vector<LineGroup> groups;  // ascending by slope, each with >= 2 members
  /// Points sharing the anchor's abscissa (slope undefined); the anchor itself
  /// is never included.
  std::vector<GraphPoint> vertical;
};

/// One point per fraction of F_kappa.
std::vector<GraphPoint> graph_points(std::uint64_t kappa);

/// Groups points by their exact slope to the anchor.
CollinearResult collinear_through(const Anchor& anchor, const std::vector<GraphPoint>& points);

struct CategoryAReport {
  std::vector<LineGroup> groups;
  /// Every group of slope 1/n holds exactly the numerator-n fractions.
  bool numerator_characterization = false;
};

/// Lines through (0,0).
CategoryAReport classify_category_a(std::uint64_t kappa);

struct IntegerSlope {
  BigInt slope;
  std::size_t members = 0;
  /// All (a, n) with a >= 2, n >= 1 and slope = a*n + 1.
  std::vector<std::pair<BigInt, BigInt>> plus_forms;
  /// All (a, n) with a >= 2, n >= 1 and slope = a*n - 1.
  std::vector<std::pair<BigInt, BigInt>> minus_forms;
};

struct CategoryBReport {
  std::vector<LineGroup> groups;
  /// Every member of a slope-c group satisfies c = (q-1)/(q-p).
  bool slope_characterization = false;
  std::vector<IntegerSlope> integer_slopes;
};

/// Lines through (1,1).
CategoryBReport classify_category_b(std::uint64_t kappa);

/// Detector restricted to the points introduced by Farey refinements
/// first_level..last_level, i.e. denominators in that range.
CollinearResult sub_category(const Anchor& anchor, std::uint64_t kappa, std::uint64_t first_level,
                             std::uint64_t last_level);

}  // namespace farey
