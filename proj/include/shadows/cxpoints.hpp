#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadows/decor.hpp"
#include "shadows/homology.hpp"

namespace shadows {

enum class PointSign { Positive, Negative };

char sign_char(PointSign s);

// A complex point of a region; elliptic for index +1, hyperbolic for -1.
struct ComplexPoint {
  PointSign sign = PointSign::Positive;
  int index = 1;
  bool elliptic() const { return index > 0; }
  auto operator<=>(const ComplexPoint&) const = default;
};

// Points carry no position: a region is a disc and any two of its points can
// be joined by an arc, so each region holds a sorted multiset.
struct DecoratedShadow {
  BranchedShadow shadow;
  std::vector<std::vector<ComplexPoint>> points;  // per region, sorted

  explicit DecoratedShadow(BranchedShadow s);
  void add(int region, ComplexPoint p);
  int count(PointSign sign) const;
};

// Throws InvalidArgument on zero indices or bad region ids.
void validate(const DecoratedShadow& d);

// Splits every point of index n into |n| points of index sign(n).
DecoratedShadow normalize(const DecoratedShadow& d);

struct IndexCochains {
  CochainClass plus;
  CochainClass minus;
};
IndexCochains index_cochains(const DecoratedShadow& d);

// Removes a pair of same-sign points of indices +1 and -1 from a region.
DecoratedShadow rewrite_annihilate(const DecoratedShadow& d, int region, ComplexPoint p1, ComplexPoint p2);

// Adds a pair of points of indices +1 and -1 and the given sign.
DecoratedShadow rewrite_create(const DecoratedShadow& d, int region, PointSign sign);

// Isotopy across an edge: (sign, epsilon) on the preferred wing's region and
// (sign, -epsilon) on each of the other two.
DecoratedShadow rewrite_edge_push(const DecoratedShadow& d, int edge, PointSign sign, int epsilon);

enum class RewriteKind { Create, Annihilate, Push };

// Script lines: `create <region> <+|->`, `annihilate <region> <+|->` (one
// point of index +1 and one of index -1) and `push <edge> <+|-> <+1|-1>`.
struct CxRewrite {
  RewriteKind kind = RewriteKind::Create;
  int target = 0;  // region, or edge for pushes
  PointSign sign = PointSign::Negative;
  int epsilon = 1;
  bool operator==(const CxRewrite&) const = default;
};

std::string format_rewrite(const CxRewrite& r);
CxRewrite parse_rewrite(const std::string& line);
DecoratedShadow apply_rewrite(const DecoratedShadow& d, const CxRewrite& r);

struct Elimination {
  bool obstructed = false;
  std::vector<CxRewrite> steps;
  std::optional<DecoratedShadow> result;
  CochainClass residual;  // [I^-] when obstructed
};

// Clears every negative point when [I^-] = 0: solves delta(x) = I^- over the
// edges, pushes |x_e| times at each edge, then annihilates the pairs. Throws
// BudgetExceeded when more than `budget` rewrites would be emitted.
Elimination eliminate_negative(const DecoratedShadow& d, int budget);

struct RegionGeometry {
  int chi = 1;
  int nu = 0;
  int c1 = 0;
};

struct BishopReport {
  bool pass = false;
  int plus = 0;            // I^+ of the points
  int minus = 0;           // I^-
  int plus_residual = 0;   // 2 I^+ - (chi + nu + c1)
  int minus_residual = 0;  // 2 I^- - (chi + nu - c1)
};

// Checks I^+ = (chi + nu + c1)/2 and I^- = (chi + nu - c1)/2 for the points
// of one region. ParityViolation when chi + nu + c1 is odd.
BishopReport bishop_check(const std::vector<ComplexPoint>& points, const RegionGeometry& geom);

}  // namespace shadows
