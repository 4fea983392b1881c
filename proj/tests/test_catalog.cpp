#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "shadows/blowup.hpp"
#include "shadows/fixtures.hpp"
#include "shadows/tables.hpp"
#include "support.hpp"

using namespace shadows;

TEST_CASE("every catalog entry validates and is branched") {
  for (const Fixture& f : catalog()) {
    CAPTURE(f.name);
    CHECK(validate(f.doc.poly).ok());
    CHECK_NOTHROW((void)branched_of(f.doc));
  }
  CHECK_THROWS_AS((void)fixture("no-such-fixture"), ShadowError);
}

TEST_CASE("orbit fixtures are deterministic") {
  const Fixture a = fixture("orbit:abalone:5:4");
  const Fixture b = fixture("orbit:abalone:5:4");
  CHECK(a.doc == b.doc);
  const BranchedShadow s = branched_of(a.doc);
  CHECK(s.poly.vertex_count() > 2);
}

TEST_CASE("the catalog directory overrides built-ins") {
  const auto dir = std::filesystem::temp_directory_path() / "shadows_catalog_test";
  std::filesystem::create_directories(dir);
  ShadowDocument doc = fixture("mono3").doc;
  {
    std::ofstream os(dir / "abalone.shadow");
    os << print_document(doc);
  }
  ::setenv("SHADOWS_CATALOG", dir.c_str(), 1);
  CHECK(fixture("abalone").doc == doc);
  ::unsetenv("SHADOWS_CATALOG");
  CHECK_FALSE(fixture("abalone").doc == doc);
  std::filesystem::remove_all(dir);
}

TEST_CASE("branching by blow-up") {
  for (const std::string& name : testing::base_fixtures()) {
    const Shadow s = shadow_of(fixture(name).doc);
    // A branching needs no moves.
    for (const Branching& b : enumerate_branchings(s.poly)) CHECK(branch_by_blowup(s, b.orientation, 10).moves.empty());
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const std::vector<int> start(s.poly.region_count(), 1);
      const BlowupResult r = branch_by_blowup(s, start, 40, seed);
      CHECK(is_branching(r.result.poly, r.result.branching.orientation));
      const BranchedShadow replay = replay_blowup(s, start, r.moves);
      CHECK(testing::decorated_code(replay) == testing::decorated_code(r.result));
      CHECK(branch_by_blowup(s, start, 40, seed).moves == r.moves);
    }
  }
}

TEST_CASE("blow-up budget") {
  const Shadow s = shadow_of(fixture("bing").doc);
  std::vector<int> o(s.poly.region_count(), 1);
  if (!violating_edges(s.poly, o).empty()) {
    try {
      (void)branch_by_blowup(s, o, 0);
      FAIL("expected StepBudgetExceeded");
    } catch (const ShadowError& e) {
      CHECK(e.code() == ErrorCode::StepBudgetExceeded);
    }
  }
}

TEST_CASE("descent finds orientations with few violations") {
  for (const Polyhedron& p : enumerate_polyhedra(1)) {
    const std::vector<int> o = descend_orientation(p);
    const std::vector<int> all(p.region_count(), 1);
    CHECK(violating_edges(p, o).size() <= violating_edges(p, all).size());
  }
}

TEST_CASE("reference tables") {
  for (const std::string& w : table_names()) {
    CAPTURE(w);
    const TableReport rep = table_report(w);
    CHECK(rep.match);
    CHECK(rep.differences.empty());
    CHECK(rep.generated == regenerate_table(w));
  }
  for (const OneTwoRowResult& r : one_two_pipeline()) {
    CHECK(r.consistent);
    CHECK(r.label != "?");
  }
}
