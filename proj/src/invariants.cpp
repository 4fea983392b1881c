#include "shadows/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace shadows {

int MawProfile::index(int region) const {
  int t = 0;
  for (const MawPassage& m : regions.at(region)) t += m.turn2;
  return 1 + t / 2;
}

MawProfile maw_profile(const BranchedShadow& s) {
  const Polyhedron& p = s.poly;
  std::vector<int> pref(p.edge_count());
  for (int e = 0; e < p.edge_count(); ++e) pref[e] = preferred_wing(s, e).wing;
  MawProfile mp;
  mp.regions.resize(p.region_count());
  for (int r = 0; r < p.region_count(); ++r) {
    const auto& steps = p.region(r).boundary.steps;
    const int n = static_cast<int>(steps.size());
    auto& out = mp.regions[r];
    out.resize(n);
    for (int k = 0; k < n; ++k) out[k].inward = pref[steps[k].edge] == steps[k].wing;
    // Each switch between inward and outward is half a turn backwards.
    for (int k = 0; k < n; ++k) out[k].turn2 = out[k].inward != out[(k + 1) % n].inward ? -1 : 0;
  }
  return mp;
}

IntMatrix branched_boundary(const BranchedShadow& s) {
  const Polyhedron& p = s.poly;
  IntMatrix d(p.edge_count(), p.region_count());
  for (int e = 0; e < p.edge_count(); ++e) {
    const int pw = preferred_wing(s, e).wing;
    for (int w = 0; w < 3; ++w) d(e, p.region_of(e, w)) += w == pw ? -1 : 1;
  }
  return d;
}

std::shared_ptr<const Presentation> branched_presentation(const BranchedShadow& s) {
  const Polyhedron& p = s.poly;
  std::vector<std::string> labels;
  for (int r = 0; r < p.region_count(); ++r) labels.push_back("R" + std::to_string(r));
  return std::make_shared<Presentation>(p.region_count(), branched_boundary(s), labels);
}

std::vector<IntVector> h2_basis(const BranchedShadow& s) { return integer_kernel(branched_boundary(s)); }

namespace {

CochainClass euler_on(const BranchedShadow& s, std::shared_ptr<const Presentation> pres) {
  const MawProfile mp = maw_profile(s);
  IntVector v(s.poly.region_count());
  for (int r = 0; r < s.poly.region_count(); ++r) v[r] = mp.index(r);
  return make_class(std::move(pres), v, 1);
}

CochainClass gleam_on(const BranchedShadow& s, std::shared_ptr<const Presentation> pres) {
  return make_class(std::move(pres), to_int_vector(s.gleam.doubled), 2);
}

}  // namespace

CochainClass euler_cochain(const BranchedShadow& s) { return euler_on(s, branched_presentation(s)); }

CochainClass gleam_cochain(const BranchedShadow& s) { return gleam_on(s, branched_presentation(s)); }

ChernData chern_class(const BranchedShadow& s) {
  auto pres = branched_presentation(s);
  ChernData c{euler_on(s, pres), gleam_on(s, pres), {}};
  c.c1 = c.eul.doubled() + c.gl;
  return c;
}

IntVector pushforward(const BranchedShadow& before, const MoveOutcome& out, const IntVector& x) {
  const Polyhedron& p = before.poly;
  if (static_cast<int>(x.size()) != p.region_count())
    throw ShadowError(ErrorCode::InvalidArgument, "cochain size differs from region count");
  IntVector y = x;
  if (out.vanished >= 0 && y[out.vanished] != 0) {
    const IntMatrix rel = branched_boundary(before);
    int use = -1;
    for (int e = 0; e < p.edge_count() && use < 0; ++e)
      if (abs(rel(e, out.vanished)) == 1) use = e;
    if (use < 0) throw ShadowError(ErrorCode::InvalidArgument, "vanished region meets no edge exactly once");
    const mpz_class q = y[out.vanished] * rel(use, out.vanished);
    for (int r = 0; r < p.region_count(); ++r) y[r] -= q * rel(use, r);
  }
  IntVector z(out.poly.region_count(), 0);
  for (int r = 0; r < p.region_count(); ++r)
    if (out.region_map[r] >= 0) z[out.region_map[r]] += y[r];
  return z;
}

CochainClass pushforward(const BranchedShadow& before, const MoveOutcome& out, const CochainClass& x,
                         std::shared_ptr<const Presentation> after) {
  if (x.scale == 1) return make_class(std::move(after), pushforward(before, out, x.rep), 1);
  // At doubled scale the relation used for elimination is applied twice.
  IntVector y = x.rep;
  IntVector z = pushforward(before, out, y);
  return make_class(std::move(after), z, x.scale);
}


namespace {

// Switches of maw status at passages through the given vertices, per region.
std::vector<int> local_switches(const Polyhedron& p, const std::vector<int>& o, const std::vector<int>& vertices) {
  std::vector<bool> in(p.vertex_count(), false);
  for (int v : vertices) in[v] = true;
  std::vector<int> sw(p.region_count(), 0);
  for (int r = 0; r < p.region_count(); ++r) {
    const auto& steps = p.region(r).boundary.steps;
    const auto cs = p.corners(r);
    const int n = static_cast<int>(steps.size());
    for (int k = 0; k < n; ++k) {
      if (!in[cs[k].vertex]) continue;
      const Step& a = steps[k];
      const Step& b = steps[(k + 1) % n];
      const bool ia = preferred_wing(p, o, a.edge).wing == a.wing;
      const bool ib = preferred_wing(p, o, b.edge).wing == b.wing;
      sw[r] += ia != ib;
    }
  }
  return sw;
}

}  // namespace

IntVector local_euler_delta(const Polyhedron& before, const std::vector<int>& before_orientation,
                            const std::vector<int>& before_vertices, const MoveOutcome& out,
                            const std::vector<int>& after_vertices) {
  const std::vector<int> sb = local_switches(before, before_orientation, before_vertices);
  const std::vector<int> sa = local_switches(out.poly, out.orientation, after_vertices);
  IntVector d(out.poly.region_count(), 0);
  std::vector<int> preimage(out.poly.region_count(), -1);
  for (int r = 0; r < before.region_count(); ++r)
    if (out.region_map[r] >= 0) preimage[out.region_map[r]] = r;
  for (int r = 0; r < out.poly.region_count(); ++r) {
    const int diff = preimage[r] >= 0 ? sa[r] - sb[preimage[r]] : sa[r] - 2;
    if (diff % 2 != 0) throw ShadowError(ErrorCode::InvalidArgument, "odd local switch count");
    d[r] = -diff / 2;
  }
  return d;
}

IntMatrix partial_boundary(const Polyhedron& p, const std::vector<int>& orientation, const std::vector<int>& edges) {
  IntMatrix d(p.edge_count(), p.region_count());
  for (int e : edges) {
    const int pw = preferred_wing(p, orientation, e).wing;
    for (int w = 0; w < 3; ++w) d(e, p.region_of(e, w)) += w == pw ? -1 : 1;
  }
  return d;
}

std::shared_ptr<const Presentation> ball_presentation(const Polyhedron& p, const std::vector<int>& orientation,
                                                      const std::vector<BallTet>& tets,
                                                      const std::array<bool, 4>& internal) {
  const int n = static_cast<int>(tets.size());
  std::map<int, int> index;
  for (int c = 0; c < n; ++c) index[tets[c].vertex] = c;
  auto local = [](const BallTet& bt, int slot) {
    for (int k = 0; k < 4; ++k)
      if (bt.label[k] == slot) return k;
    return -1;
  };
  // union-find over corners c * 6 + germ (germ in slot indices)
  std::vector<int> parent(n * 6);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      if (!internal[k]) continue;
      const int slot = tets[c].label[k];
      const EdgeEnd ee = p.end_at(tets[c].vertex, slot);
      const Edge& ed = p.edge(ee.edge);
      const VertexSlot other = ed.ends[1 - ee.end];
      const auto it = index.find(other.vertex);
      if (it == index.end() || !internal[local(tets[it->second], other.slot)])
        throw ShadowError(ErrorCode::DanglingEdge, "internal face of the ball leaves the ball");
      for (int w = 0; w < 3; ++w) {
        const int a = c * 6 + germ_index(slot, ed.wings[ee.end][w]);
        const int b = it->second * 6 + germ_index(other.slot, ed.wings[1 - ee.end][w]);
        parent[find(a)] = find(b);
      }
    }
  std::map<int, int> gen;
  for (int x = 0; x < n * 6; ++x) gen.emplace(find(x), static_cast<int>(gen.size()));
  std::vector<std::vector<long>> rows;
  for (int c = 0; c < n; ++c)
    for (int slot = 0; slot < 4; ++slot) {
      const int v = tets[c].vertex;
      const EdgeEnd ee = p.end_at(v, slot);
      const int pw = preferred_wing(p, orientation, ee.edge).wing;
      std::vector<long> row(gen.size(), 0);
      for (int w = 0; w < 3; ++w) {
        const int wslot = p.edge(ee.edge).wings[ee.end][w];
        row[gen.at(find(c * 6 + germ_index(slot, wslot)))] += w == pw ? -1 : 1;
      }
      rows.push_back(row);
    }
  const int g = static_cast<int>(gen.size());
  IntMatrix rel = IntMatrix::from_rows(rows, g);
  // Generators appear in the relations through the branching orientation of
  // their region; corners keep the sign it induces.
  return std::make_shared<Presentation>(g, std::move(rel));
}

std::shared_ptr<const Presentation> move_ball_presentation(const BranchedShadow& s, const MoveInstance& m,
                                                           const MoveOutcome& out) {
  const bool fwd = m.direction == Direction::Forward;
  if (m.kind == MoveKind::OneTwo) {
    const Polyhedron& small = fwd ? s.poly : out.poly;
    const std::vector<int>& o = fwd ? s.branching.orientation : out.orientation;
    return ball_presentation(small, o, {out.ball.before}, {false, false, false, false});
  }
  const Polyhedron& big = fwd ? out.poly : s.poly;
  const std::vector<int>& o = fwd ? out.orientation : s.branching.orientation;
  const std::array<bool, 4> internal = m.kind == MoveKind::Lune ? std::array<bool, 4>{true, true, false, false}
                                                                : std::array<bool, 4>{false, false, true, true};
  return ball_presentation(big, o, out.ball.tets, internal);
}

namespace {

struct StepData {
  MoveDeltas deltas;
  CochainClass alpha;
};

CochainClass push_class(const BranchedShadow& before, const MoveOutcome& out, const CochainClass& x,
                        std::shared_ptr<const Presentation> after) {
  return pushforward(before, out, x, std::move(after));
}

// alpha of the forward move whose after-picture is `big` with ball `ball`,
// over big's presentation.
CochainClass forward_alpha_closed_form(const BranchedShadow& before, const MoveInstance& m, const MoveOutcome& out,
                                       const BranchedShadow& big, std::shared_ptr<const Presentation> big_pres) {
  if (m.kind == MoveKind::OneTwo) {
    const OneTwoLabels lab = one_two_labels(before.poly, before.branching.orientation, m, out);
    if (!lab.row) throw ShadowError(ErrorCode::InvalidArgument, "1-2 version matches no table row");
    if (lab.row->c1_coef == 0) return zero_class(big_pres);
    return unit_class(big_pres, lab.regions[lab.row->c1_region], lab.row->c1_coef / 2);
  }
  MoveOutcome view = out;
  if (m.direction == Direction::Inverse) {
    view.poly = big.poly;
    view.orientation = big.branching.orientation;
    view.created = {out.vanished};
  }
  const FlavorInfo fi = classify_flavor(view);
  if (fi.flavor != Flavor::Bumping) return zero_class(big_pres);
  return unit_class(big_pres, fi.delta, -1);
}

StepData run_step(const BranchedShadow& s, const MoveInstance& m) {
  MoveOutcome out = apply_move(s.poly, s.gleam, &s.branching.orientation, m);
  BranchedShadow after(out.poly, out.gleam, Branching{out.orientation});
  const ChernData cb = chern_class(s);
  const ChernData ca = chern_class(after);
  auto pres = ca.eul.pres;
  const CochainClass eul = ca.eul - push_class(s, out, cb.eul, pres);
  const CochainClass gl = ca.gl - push_class(s, out, cb.gl, pres);
  const CochainClass c1 = ca.c1 - push_class(s, out, cb.c1, pres);

  CochainClass alpha;
  if (m.direction == Direction::Forward) {
    alpha = forward_alpha_closed_form(s, m, out, after, pres);
  } else {
    // Undoing a forward move from `after` back to `s`: minus its alpha.
    const CochainClass back = forward_alpha_closed_form(s, m, out, s, cb.eul.pres);
    alpha = -push_class(s, out, back, pres);
  }
  const auto local = move_ball_presentation(s, m, out);
  if (!local->torsion().empty())
    throw ShadowError(ErrorCode::TorsionCheckFailed, "move ball module has torsion");
  if (!class_equal((2 * alpha).doubled(), c1))
    throw ShadowError(ErrorCode::TorsionCheckFailed, "2 alpha differs from Delta c1 for " + format_move(m));
  return StepData{MoveDeltas{std::move(after), std::move(out), eul, gl, c1}, alpha};
}

}  // namespace

MoveDeltas move_deltas(const BranchedShadow& s, const MoveInstance& m) {
  MoveOutcome out = apply_move(s.poly, s.gleam, &s.branching.orientation, m);
  BranchedShadow after(out.poly, out.gleam, Branching{out.orientation});
  const ChernData cb = chern_class(s);
  const ChernData ca = chern_class(after);
  auto pres = ca.eul.pres;
  MoveDeltas d{after, out, ca.eul - push_class(s, out, cb.eul, pres), ca.gl - push_class(s, out, cb.gl, pres),
               ca.c1 - push_class(s, out, cb.c1, pres)};
  return d;
}

CochainClass alpha_of_move(const BranchedShadow& s, const MoveInstance& m) { return run_step(s, m).alpha; }

SequenceAlpha alpha_of_sequence(const BranchedShadow& s, const std::vector<MoveInstance>& moves) {
  BranchedShadow cur = s;
  auto pres = branched_presentation(cur);
  CochainClass alpha = zero_class(pres), c1 = zero_class(pres, 2);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    StepData st = [&] {
      try {
        return run_step(cur, moves[i]);
      } catch (const ShadowError& e) {
        if (e.code() == ErrorCode::TorsionCheckFailed) throw;
        throw ShadowError(ErrorCode::ReplayFailure,
                          "step " + std::to_string(i + 1) + " (" + format_move(moves[i]) + "): " + e.what());
      }
    }();
    auto next = st.alpha.pres;
    alpha = push_class(cur, st.deltas.outcome, alpha, next) + st.alpha;
    c1 = push_class(cur, st.deltas.outcome, c1, next) + st.deltas.c1;
    cur = std::move(st.deltas.after);
  }
  return SequenceAlpha{std::move(cur), alpha, c1};
}

namespace {

mpz_class l1(const IntVector& v) {
  mpz_class t = 0;
  for (const mpz_class& x : v) t += abs(x);
  return t;
}

struct Candidate {
  MoveInstance move;
  StepData step;
  CochainClass residual;
};

std::vector<MoveInstance> realize_candidates(const BranchedShadow& s) {
  std::vector<MoveInstance> out;
  for (const Site& site : enumerate_sites(s.poly, s.gleam, MoveKind::Lune, Direction::Forward))
    for (int side = 0; side < 2; ++side)
      for (int version = 1; version <= 2; ++version) {
        Site st = site;
        st.side = side;
        out.push_back({MoveKind::Lune, Direction::Forward, st, version});
      }
  for (MoveKind k : {MoveKind::Lune, MoveKind::MP23})
    for (const Site& site : enumerate_sites(s.poly, s.gleam, k, Direction::Inverse))
      out.push_back({k, Direction::Inverse, site, 0});
  return out;
}

// Best single move for the residual: zero residual first, then smallest L1.
std::optional<Candidate> best_move(const BranchedShadow& cur, const CochainClass& residual, bool allow_zero_alpha) {
  std::optional<Candidate> best;
  auto score = [](const Candidate& c) { return is_zero_class(c.residual) ? mpz_class(-1) : l1(c.residual.rep); };
  for (const MoveInstance& m : realize_candidates(cur)) {
    std::optional<StepData> st;
    try {
      st = run_step(cur, m);
    } catch (const ShadowError& e) {
      if (e.code() == ErrorCode::TorsionCheckFailed) throw;
      continue;
    }
    if (!allow_zero_alpha && is_zero_class(st->alpha)) continue;
    CochainClass r = push_class(cur, st->deltas.outcome, residual, st->alpha.pres) - st->alpha;
    Candidate cand{m, std::move(*st), std::move(r)};
    if (!best || score(cand) < score(*best)) best = std::move(cand);
  }
  return best;
}

}  // namespace

RealizeResult realize_class(const BranchedShadow& s, const CochainClass& target, int budget) {
  if (target.scale != 1) throw ShadowError(ErrorCode::ScaleMismatch, "realize_class needs an integral target");
  RealizeResult res{false, {}, s, target};
  int rewrites = 0;
  auto take = [&](Candidate& c) {
    if (static_cast<int>(res.moves.size()) >= budget)
      throw ShadowError(ErrorCode::BudgetExceeded, "realize_class ran out of moves");
    res.moves.push_back(c.move);
    res.residual = c.residual;
    res.final_shadow = std::move(c.step.deltas.after);
  };
  auto better = [](const Candidate& c, const CochainClass& r) {
    return is_zero_class(c.residual) || l1(c.residual.rep) < l1(r.rep);
  };
  while (true) {
    if (is_zero_class(res.residual)) {
      res.complete = true;
      return res;
    }
    const BranchedShadow cur = res.final_shadow;
    std::optional<Candidate> best = best_move(cur, res.residual, false);
    if (best && better(*best, res.residual)) {
      take(*best);
      continue;
    }
    // Look one sliding move ahead: a move with alpha zero can expose a
    // bumping site that the current branching lacks.
    std::optional<std::pair<Candidate, Candidate>> pair;
    for (const MoveInstance& m : realize_candidates(cur)) {
      if (m.direction != Direction::Forward) continue;
      std::optional<StepData> st;
      try {
        st = run_step(cur, m);
      } catch (const ShadowError& e) {
        if (e.code() == ErrorCode::TorsionCheckFailed) throw;
        continue;
      }
      if (!is_zero_class(st->alpha)) continue;
      CochainClass r1 = push_class(cur, st->deltas.outcome, res.residual, st->alpha.pres);
      std::optional<Candidate> second = best_move(st->deltas.after, r1, false);
      if (!second || !better(*second, r1)) continue;
      if (!pair || l1(second->residual.rep) < l1(pair->second.residual.rep))
        pair.emplace(Candidate{m, std::move(*st), std::move(r1)}, std::move(*second));
      if (is_zero_class(pair->second.residual)) break;
    }
    if (pair) {
      take(pair->first);
      take(pair->second);
      continue;
    }
    // Rewrite a negative coefficient on a region preferred along all of its
    // edges through an edge relation.
    const IntMatrix rel = branched_boundary(cur);
    bool rewrote = false;
    for (int r = 0; r < cur.poly.region_count() && !rewrote; ++r) {
      if (res.residual.rep[r] >= 0) continue;
      bool everywhere = true;
      for (int e = 0; e < cur.poly.edge_count(); ++e)
        if (rel(e, r) > 0) everywhere = false;
      if (!everywhere) continue;
      for (int e = 0; e < cur.poly.edge_count() && !rewrote; ++e) {
        if (rel(e, r) != -1) continue;
        const mpz_class c = res.residual.rep[r];
        for (int j = 0; j < cur.poly.region_count(); ++j) res.residual.rep[j] += c * rel(e, j);
        rewrote = true;
      }
    }
    if (!rewrote || ++rewrites > 4 * budget) return res;
  }
}

SpincLedger::SpincLedger(BranchedShadow base)
    : base_(base), current_(std::move(base)), offset_(zero_class(branched_presentation(current_))) {}

void SpincLedger::apply(const MoveInstance& m) {
  const SequenceAlpha sa = alpha_of_sequence(current_, {m});
  const MoveOutcome out = apply_move(current_.poly, current_.gleam, &current_.branching.orientation, m);
  offset_ = pushforward(current_, out, offset_, sa.alpha.pres) + sa.alpha;
  current_ = sa.final_shadow;
}

void SpincLedger::twist(const CochainClass& l) { offset_ = offset_ + l; }
}  // namespace shadows
