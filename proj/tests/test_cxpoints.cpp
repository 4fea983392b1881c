#include <doctest.h>

#include <random>

#include "shadows/cxpoints.hpp"
#include "shadows/fixtures.hpp"
#include "shadows/invariants.hpp"

using namespace shadows;

namespace {

DecoratedShadow decorate(const std::string& name, std::mt19937_64& rng, int points) {
  DecoratedShadow d(branched_of(fixture(name).doc));
  std::uniform_int_distribution<int> reg(0, d.shadow.poly.region_count() - 1), bit(0, 1);
  for (int k = 0; k < points; ++k)
    d.add(reg(rng), {bit(rng) ? PointSign::Positive : PointSign::Negative, bit(rng) ? 1 : -1});
  return d;
}

CxRewrite random_rewrite(const DecoratedShadow& d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2), bit(0, 1);
  const PointSign sg = bit(rng) ? PointSign::Positive : PointSign::Negative;
  const int k = kind(rng);
  if (k == 0)
    return {RewriteKind::Create, std::uniform_int_distribution<int>(0, d.shadow.poly.region_count() - 1)(rng), sg, 1};
  if (k == 1) {
    for (int r = 0; r < static_cast<int>(d.points.size()); ++r) {
      const auto& v = d.points[r];
      if (std::count(v.begin(), v.end(), ComplexPoint{sg, 1}) && std::count(v.begin(), v.end(), ComplexPoint{sg, -1}))
        return {RewriteKind::Annihilate, r, sg, 1};
    }
  }
  return {RewriteKind::Push, std::uniform_int_distribution<int>(0, d.shadow.poly.edge_count() - 1)(rng), sg,
          bit(rng) ? 1 : -1};
}

}  // namespace

TEST_CASE("index classes survive every rewrite") {
  std::mt19937_64 rng(17);
  for (const char* name : {"abalone", "s2xs1", "mono4"}) {
    for (int t = 0; t < 20; ++t) {
      DecoratedShadow d = decorate(name, rng, 4);
      const IndexCochains before = index_cochains(d);
      for (int k = 0; k < 10; ++k) d = apply_rewrite(d, random_rewrite(d, rng));
      const IndexCochains after = index_cochains(d);
      CHECK(class_equal(before.plus, after.plus));
      CHECK(class_equal(before.minus, after.minus));
    }
  }
}

TEST_CASE("rewrite preconditions") {
  DecoratedShadow d(branched_of(fixture("abalone").doc));
  d.add(0, {PointSign::Negative, 1});
  d.add(0, {PointSign::Positive, -1});
  try {
    (void)rewrite_annihilate(d, 0, {PointSign::Negative, 1}, {PointSign::Positive, -1});
    FAIL("expected PreconditionViolated");
  } catch (const ShadowError& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
  CHECK_THROWS_AS((void)rewrite_annihilate(d, 1, {PointSign::Negative, 1}, {PointSign::Negative, -1}), ShadowError);
  CHECK_THROWS_AS((void)rewrite_edge_push(d, 0, PointSign::Negative, 2), ShadowError);
  CHECK_THROWS_AS(d.add(0, {PointSign::Negative, 0}), ShadowError);
  const DecoratedShadow e = rewrite_create(d, 2, PointSign::Negative);
  CHECK(e.count(PointSign::Negative) == 3);
  const DecoratedShadow f = rewrite_annihilate(e, 2, {PointSign::Negative, 1}, {PointSign::Negative, -1});
  CHECK(f.points == d.points);
}

TEST_CASE("normalize splits indices") {
  DecoratedShadow d(branched_of(fixture("abalone").doc));
  d.add(1, {PointSign::Positive, 3});
  d.add(1, {PointSign::Negative, -2});
  const DecoratedShadow n = normalize(d);
  CHECK(n.points[1].size() == 5);
  CHECK(class_equal(index_cochains(n).plus, index_cochains(d).plus));
  CHECK(class_equal(index_cochains(n).minus, index_cochains(d).minus));
}

TEST_CASE("rewrite lines round-trip") {
  for (const CxRewrite& r : {CxRewrite{RewriteKind::Create, 3, PointSign::Positive, 1},
                             CxRewrite{RewriteKind::Annihilate, 0, PointSign::Negative, 1},
                             CxRewrite{RewriteKind::Push, 2, PointSign::Negative, -1}})
    CHECK(parse_rewrite(format_rewrite(r)) == r);
  CHECK_THROWS_AS(parse_rewrite("push 1 -"), ShadowError);
  CHECK_THROWS_AS(parse_rewrite("spin 1 +"), ShadowError);
}

TEST_CASE("negative points are eliminated exactly when their class vanishes") {
  std::mt19937_64 rng(23);
  int solved = 0, blocked = 0;
  for (const char* name : {"abalone", "s2xs1", "mono3", "mono4"})
    for (int t = 0; t < 10; ++t) {
      const DecoratedShadow d = decorate(name, rng, 5);
      const Elimination el = eliminate_negative(d, 200);
      CHECK(el.obstructed == !is_zero_class(index_cochains(d).minus));
      if (el.obstructed) {
        ++blocked;
        continue;
      }
      ++solved;
      REQUIRE(el.result);
      CHECK(el.result->count(PointSign::Negative) == 0);
      DecoratedShadow replay = normalize(d);
      for (const CxRewrite& r : el.steps) replay = apply_rewrite(replay, r);
      CHECK(replay.points == el.result->points);
      CHECK(class_equal(index_cochains(*el.result).plus, index_cochains(d).plus));
    }
  CHECK(solved > 0);
  CHECK(blocked > 0);
}

TEST_CASE("elimination budget") {
  DecoratedShadow d(branched_of(fixture("abalone").doc));
  for (int k = 0; k < 3; ++k) d.add(0, {PointSign::Negative, 1});
  for (int k = 0; k < 3; ++k) d.add(0, {PointSign::Negative, -1});
  try {
    (void)eliminate_negative(d, 2);
    FAIL("expected BudgetExceeded");
  } catch (const ShadowError& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("Bishop identities") {
  const RegionGeometry g{1, 2, 1};
  std::vector<ComplexPoint> pts = {{PointSign::Positive, 1}, {PointSign::Positive, 1}, {PointSign::Negative, 1}};
  CHECK(bishop_check(pts, g).pass);
  pts.push_back({PointSign::Negative, -1});
  const BishopReport rep = bishop_check(pts, g);
  CHECK_FALSE(rep.pass);
  CHECK(rep.minus_residual == -2);
  try {
    (void)bishop_check(pts, RegionGeometry{1, 1, 1});
    FAIL("expected ParityViolation");
  } catch (const ShadowError& e) {
    CHECK(e.code() == ErrorCode::ParityViolation);
  }
}
