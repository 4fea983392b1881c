#include <doctest.h>

#include <random>

#include "shadows/gluing.hpp"
#include "shadows/invariants.hpp"
#include "support.hpp"

using namespace shadows;
using namespace shadows::testing;

TEST_CASE("c1 is 2 Eul + gl and its parity follows the Z2-gleam") {
  for (const std::string& name : base_fixtures()) {
    const BranchedShadow s = branched_of(fixture(name).doc);
    const ChernData c = chern_class(s);
    CHECK(c.c1.scale == 2);
    for (int r = 0; r < s.poly.region_count(); ++r) {
      CHECK(c.c1.rep[r] == 2 * c.eul.rep[r] + s.gleam.doubled[r]);
      CHECK(mpz_class(abs(c.c1.rep[r]) % 2) == z2_gleam(s.poly, r));
    }
  }
}

TEST_CASE("known Euler indices") {
  const BranchedShadow s = branched_of(fixture("abalone").doc);
  const CochainClass e = euler_cochain(s);
  CHECK(e.rep == IntVector{1, -1, 1});
  CHECK(h2_basis(s).empty());
  const BranchedShadow t = branched_of(fixture("s2xs1").doc);
  CHECK(h2_basis(t).size() == 1);
  CHECK(branched_presentation(t)->free_rank() == 1);
}

TEST_CASE("Euler indices do not depend on labels") {
  std::mt19937_64 rng(5);
  for (const std::string& name : base_fixtures()) {
    const BranchedShadow s = branched_of(fixture(name).doc);
    const Relabeling rl = random_relabel(s.poly, rng);
    const Polyhedron q(rl.data);
    std::vector<int> o(q.region_count()), g(q.region_count());
    for (int r = 0; r < s.poly.region_count(); ++r) {
      o[rl.region_map[r]] = s.branching.orientation[r] * rl.orientation_factor[r];
      g[rl.region_map[r]] = s.gleam.doubled[r];
    }
    const BranchedShadow t(q, Gleam{g}, Branching{o});
    const CochainClass a = euler_cochain(s), b = euler_cochain(t);
    for (int r = 0; r < s.poly.region_count(); ++r) CHECK(a.rep[r] == b.rep[rl.region_map[r]]);
  }
}

TEST_CASE("Delta-lemma on the lune and 2-3 moves of the fixtures") {
  for (const std::string& name : base_fixtures()) {
    const BranchedShadow s = branched_of(fixture(name).doc);
    for (const MoveInstance& m : branched_forward_moves(s)) {
      if (m.kind == MoveKind::OneTwo) continue;
      const MoveDeltas d = move_deltas(s, m);
      const FlavorInfo fi = classify_flavor(d.outcome);
      CHECK(is_zero_class(d.gl));
      if (fi.flavor == Flavor::Bumping)
        CHECK(class_equal(d.eul, unit_class(d.eul.pres, fi.delta, -2)));
      else
        CHECK(is_zero_class(d.eul));
    }
  }
}

TEST_CASE("twice alpha is the change of c1, and a move followed by its inverse has alpha zero") {
  for (const std::string& name : base_fixtures()) {
    const BranchedShadow s = branched_of(fixture(name).doc);
    for (const MoveInstance& m : branched_forward_moves(s)) {
      CAPTURE(format_move(m));
      const MoveDeltas d = move_deltas(s, m);
      const CochainClass a = alpha_of_move(s, m);
      CHECK(class_equal((2 * a).doubled(), d.c1));
      const SequenceAlpha back = alpha_of_sequence(s, {m, inverse_of(m, d.outcome)});
      CHECK(decorated_code(back.final_shadow) == decorated_code(s));
      CHECK(is_zero_class(back.alpha));
    }
  }
}

TEST_CASE("alpha is additive along a sequence") {
  std::mt19937_64 rng(9);
  const BranchedShadow s = branched_of(fixture("s2xs1").doc);
  for (int t = 0; t < 10; ++t) {
    const Walk w = random_walk(s, rng, 6);
    const std::size_t k = w.moves.size() / 2;
    const std::vector<MoveInstance> head(w.moves.begin(), w.moves.begin() + k), tail(w.moves.begin() + k, w.moves.end());
    const SequenceAlpha all = alpha_of_sequence(s, w.moves);
    const SequenceAlpha a1 = alpha_of_sequence(s, head);
    const SequenceAlpha a2 = alpha_of_sequence(a1.final_shadow, tail);
    CHECK(class_equal(all.alpha, push_along(a1.final_shadow, tail, a1.alpha) + a2.alpha));
  }
}

TEST_CASE("a failing step is reported with its position") {
  const BranchedShadow s = branched_of(fixture("abalone").doc);
  const MoveInstance good = branched_forward_moves(s).front();
  const MoveInstance bad{MoveKind::MP23, Direction::Forward, {99, 0, 0, -1, {0, 1}}, 1};
  try {
    (void)alpha_of_sequence(s, {good, bad});
    FAIL("expected ReplayFailure");
  } catch (const ShadowError& e) {
    CHECK(e.code() == ErrorCode::ReplayFailure);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("the Spin^c ledger tracks alpha and twists") {
  const BranchedShadow s = branched_of(fixture("s2xs1").doc);
  std::mt19937_64 rng(2);
  const Walk w = random_walk(s, rng, 4);
  SpincLedger ledger(s);
  for (const MoveInstance& m : w.moves) ledger.apply(m);
  const SequenceAlpha sa = alpha_of_sequence(s, w.moves);
  CHECK(class_equal(ledger.offset(), sa.alpha));
  CHECK(class_equal(ledger.c1_difference(), 2 * sa.alpha));
  const CochainClass l = unit_class(ledger.offset().pres, 0);
  ledger.twist(l);
  CHECK(class_equal(ledger.offset(), sa.alpha + l));
}

TEST_CASE("realize_class: realized part plus residual is the target") {
  const BranchedShadow s = branched_of(fixture("s2xs1").doc);
  auto pres = branched_presentation(s);
  for (int r = 0; r < s.poly.region_count(); ++r)
    for (int c : {1, -1, 2}) {
      const CochainClass target = unit_class(pres, r, c);
      const RealizeResult res = realize_class(s, target, 8);
      const SequenceAlpha sa = alpha_of_sequence(s, res.moves);
      CHECK(class_equal(push_along(s, res.moves, target), sa.alpha + res.residual));
      if (res.complete) CHECK(is_zero_class(res.residual));
    }
}

TEST_CASE("local balls are torsion-free, the 1-2 ball is Z^3") {
  for (const std::string& name : base_fixtures()) {
    const BranchedShadow s = branched_of(fixture(name).doc);
    for (const MoveInstance& m : branched_forward_moves(s)) {
      const MoveOutcome out = apply_move(s.poly, s.gleam, &s.branching.orientation, m);
      const auto pres = move_ball_presentation(s, m, out);
      CHECK(pres->torsion().empty());
      if (m.kind == MoveKind::OneTwo) CHECK(pres->free_rank() == 3);
    }
  }
}

TEST_CASE("realize_class reaches -R with a bumping lune, sliding first when needed") {
  {
    const BranchedShadow s = branched_of(fixture("s2xs1").doc);
    const RealizeResult res = realize_class(s, unit_class(branched_presentation(s), 2, -1), 8);
    CHECK(res.complete);
    CHECK(res.moves.size() == 1);
  }
  {
    const BranchedShadow s = branched_of(fixture("mono3").doc);
    const CochainClass target = unit_class(branched_presentation(s), 1, -1);
    const RealizeResult res = realize_class(s, target, 8);
    REQUIRE(res.complete);
    CHECK(res.moves.size() == 2);
    CHECK(class_equal(alpha_of_sequence(s, res.moves).alpha, push_along(s, res.moves, target)));
  }
  const BranchedShadow s = branched_of(fixture("abalone").doc);
  const RealizeResult zero = realize_class(s, zero_class(branched_presentation(s)), 8);
  CHECK(zero.complete);
  CHECK(zero.moves.empty());
}
