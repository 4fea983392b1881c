#include "shadows/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace shadows {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Lune: return "lune";
    case MoveKind::MP23: return "mp23";
    case MoveKind::OneTwo: return "onetwo";
  }
  return "?";
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Sliding: return "sliding";
    case Flavor::Bumping: return "bumping";
    case Flavor::NotApplicable: return "n/a";
  }
  return "?";
}

namespace {

[[noreturn]] void mismatch(const std::string& what) { throw ShadowError(ErrorCode::SiteMismatch, what); }

struct FaceImage {
  int tet;
  Perm4 beta;  // old labels -> labels of the new tetrahedron
};

// A local retriangulation: `ext` holds every old tetrahedron followed by the
// new ones. Old tetrahedra listed in `removed` disappear; their faces that
// face the outside are carried by `images`.
struct Plan {
  Gluing ext;
  int old_n = 0;
  std::vector<bool> removed;
  std::map<std::pair<int, int>, FaceImage> images;
  LocalBall ball;  // for forward moves in ext indices, for inverse moves in old indices
  int lune_old_region = -1;
};

Plan start_plan(const Gluing& old, int new_tets) {
  Plan pl;
  pl.ext = old;
  pl.old_n = old.size();
  for (int i = 0; i < new_tets; ++i) pl.ext.add_tet();
  pl.removed.assign(pl.ext.size(), false);
  return pl;
}

// Re-attach the outward faces of removed tetrahedra through their images.
void carry_images(Plan& pl, const Gluing& old) {
  for (const auto& [key, img] : pl.images) {
    const auto [t, f] = key;
    const FaceGluing& fg = old.at(t, f);
    const Perm4 binv = perm_inverse(img.beta);
    if (!pl.removed[fg.tet]) {
      pl.ext.glue(img.tet, img.beta[f], fg.tet, perm_compose(fg.perm, binv));
    } else {
      auto it = pl.images.find({fg.tet, fg.face});
      if (it == pl.images.end()) mismatch("an outward face is glued to an inner face of the move");
      pl.ext.glue(img.tet, img.beta[f], it->second.tet, perm_compose(it->second.beta, perm_compose(fg.perm, binv)));
    }
  }
}

struct Compacted {
  Gluing g;
  std::vector<int> new_id;  // ext index -> new index or -1
};

Compacted compact(const Plan& pl) {
  Compacted c;
  c.new_id.assign(pl.ext.size(), -1);
  int n = 0;
  for (int t = 0; t < pl.ext.size(); ++t)
    if (!pl.removed[t]) c.new_id[t] = n++;
  c.g = Gluing(n);
  for (int t = 0; t < pl.ext.size(); ++t) {
    if (pl.removed[t]) continue;
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& fg = pl.ext.at(t, f);
      if (!fg.glued() || pl.removed[fg.tet]) mismatch("rewrite left a face unpaired");
      c.g.glue(c.new_id[t], f, c.new_id[fg.tet], fg.perm);
    }
  }
  return c;
}

struct CornerImage {
  int vertex;
  int in_slot;
  int out_slot;
};

std::optional<CornerImage> map_corner(const Plan& pl, const Compacted& c, int v, int in, int out) {
  if (!pl.removed[v]) return CornerImage{c.new_id[v], in, out};
  for (int f : {std::min(in, out), std::max(in, out)}) {
    auto it = pl.images.find({v, f});
    if (it != pl.images.end()) {
      const Perm4& b = it->second.beta;
      return CornerImage{c.new_id[it->second.tet], b[in], b[out]};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- forward lune

Plan plan_lune(const Polyhedron& p, const Gluing& old, const Site& site, int& d_region, int& corner_vertex) {
  const int e = site.edge;
  if (e < 0 || e >= p.edge_count() || site.wing < 0 || site.wing > 2 || (site.side != 0 && site.side != 1))
    mismatch("lune site does not exist");
  const int r = p.region_of(e, site.wing);
  const auto& steps = p.region(r).boundary.steps;
  const int len = static_cast<int>(steps.size());
  const int pos = p.position_of(e, site.wing);
  const int k = site.side == 0 ? pos : (pos - 1 + len) % len;
  const Step s1 = steps[k];
  const Step s2 = steps[(k + 1) % len];
  if (len < 2 || s1.edge == s2.edge) mismatch("lune needs two traversals on distinct edges");
  const Corner cor = p.corners(r)[k];
  const int v = cor.vertex;
  const int i = cor.in_slot;
  const int j = cor.out_slot;
  int pq[2], n = 0;
  for (int x = 0; x < 4; ++x)
    if (x != i && x != j) pq[n++] = x;
  // beta: labels of v -> labels of the pillow (p, q, r2, r1)
  Perm4 beta{};
  beta[pq[0]] = 0;
  beta[pq[1]] = 1;
  beta[i] = 2;
  beta[j] = 3;
  const Perm4 binv = perm_inverse(beta);
  const FaceGluing f1b = old.at(v, i);
  const FaceGluing f2b = old.at(v, j);
  Plan pl = start_plan(old, 2);
  const int T = pl.old_n, Tp = pl.old_n + 1;
  pl.ext.glue(T, 2, v, binv);
  pl.ext.glue(T, 3, v, binv);
  pl.ext.glue(Tp, 2, f1b.tet, perm_compose(f1b.perm, binv));
  pl.ext.glue(Tp, 3, f2b.tet, perm_compose(f2b.perm, binv));
  pl.ext.glue(T, 0, Tp, perm_identity());
  pl.ext.glue(T, 1, Tp, perm_identity());
  pl.ball.kind = MoveKind::Lune;
  pl.ball.tets = {{T, perm_identity()}, {Tp, perm_identity()}};
  d_region = r;
  corner_vertex = v;
  pl.lune_old_region = r;
  return pl;
}

// ---------------------------------------------------------------- forward 2->3

Plan plan_mp(const Polyhedron& p, const Gluing& old, const Site& site) {
  const int e = site.edge;
  if (e < 0 || e >= p.edge_count()) mismatch("2-3 site does not exist");
  const Edge& ed = p.edge(e);
  const int U = ed.ends[0].vertex, Up = ed.ends[1].vertex;
  if (U == Up) mismatch("2-3 move needs an edge with distinct endpoints");
  const int f = ed.ends[0].slot;
  const Perm4 P = old.at(U, f).perm;
  const int f2 = P[f];
  Plan pl = start_plan(old, 3);
  pl.removed[U] = pl.removed[Up] = true;
  int F[3], n = 0;
  for (int x = 0; x < 4; ++x)
    if (x != f) F[n++] = x;
  Perm4 beta[3], betap[3];
  for (int ci = 0; ci < 3; ++ci) {
    const int c = F[ci];
    const int a = F[(ci + 1) % 3 < (ci + 2) % 3 ? (ci + 1) % 3 : (ci + 2) % 3];
    const int b = F[(ci + 1) % 3 < (ci + 2) % 3 ? (ci + 2) % 3 : (ci + 1) % 3];
    beta[ci] = Perm4{};
    beta[ci][f] = 0;
    beta[ci][c] = 1;
    beta[ci][a] = 2;
    beta[ci][b] = 3;
    betap[ci] = Perm4{};
    betap[ci][f2] = 1;
    betap[ci][P[c]] = 0;
    betap[ci][P[a]] = 2;
    betap[ci][P[b]] = 3;
    const int T = pl.old_n + ci;
    pl.images[{U, c}] = {T, beta[ci]};
    pl.images[{Up, P[c]}] = {T, betap[ci]};
  }
  for (int ci = 0; ci < 3; ++ci)
    for (int di = ci + 1; di < 3; ++di) {
      const int c = F[ci], d = F[di];
      const int x = F[3 - ci - di];
      Perm4 q{};
      q[0] = 0;
      q[1] = 1;
      q[beta[ci][x]] = beta[di][x];
      q[beta[ci][d]] = beta[di][c];
      pl.ext.glue(pl.old_n + ci, beta[ci][d], pl.old_n + di, q);
    }
  carry_images(pl, old);
  pl.ball.kind = MoveKind::MP23;
  for (int ci = 0; ci < 3; ++ci) pl.ball.tets.push_back({pl.old_n + ci, perm_identity()});
  return pl;
}

// ---------------------------------------------------------------- forward 1->2

// Position labels of the old vertex: 0..3 stand for the faces sent to
// (T,2), (T,3), (T',2), (T',3). kImage[k] maps position labels to the labels
// of the tetrahedron carrying that face.
constexpr std::array<Perm4, 4> kOneTwoImage = {{{2, 3, 0, 1}, {2, 3, 1, 0}, {0, 1, 2, 3}, {1, 0, 2, 3}}};
constexpr Perm4 kTwist = {0, 1, 3, 2};

Plan plan_one_two(const Gluing& old, int U, const Perm4& arrangement) {
  Plan pl = start_plan(old, 2);
  pl.removed[U] = true;
  const int T = pl.old_n, Tp = pl.old_n + 1;
  const Perm4 ainv = perm_inverse(arrangement);
  for (int k = 0; k < 4; ++k) {
    pl.images[{U, arrangement[k]}] = {k < 2 ? T : Tp, perm_compose(kOneTwoImage[k], ainv)};
  }
  pl.ext.glue(T, 0, Tp, perm_identity());
  pl.ext.glue(T, 1, Tp, kTwist);
  carry_images(pl, old);
  pl.ball.kind = MoveKind::OneTwo;
  pl.ball.tets = {{T, perm_identity()}, {Tp, perm_identity()}};
  pl.ball.before = {U, arrangement};
  pl.ball.arrangement = arrangement;
  return pl;
}

// ---------------------------------------------------------------- bigon analysis for inverses

struct Bigon {
  int T = -1, Tp = -1;
  Perm4 labT{}, labTp{};  // local label -> slot
  bool twisted = false;
};

std::optional<Bigon> analyze_bigon(const Polyhedron& p, const Gluing& g, int r) {
  const auto& steps = p.region(r).boundary.steps;
  if (steps.size() != 2) return std::nullopt;
  const auto cs = p.corners(r);
  if (cs[0].vertex == cs[1].vertex) return std::nullopt;
  const Corner c = cs[0];
  Bigon b;
  b.T = c.vertex;
  const int i = c.in_slot, j = c.out_slot;
  int kl[2], n = 0;
  for (int x = 0; x < 4; ++x)
    if (x != i && x != j) kl[n++] = x;
  auto build = [&](int f0, int f1) {
    Perm4 lab{f0, f1, kl[0], kl[1]};
    const Perm4 beta = perm_inverse(lab);  // slot -> local
    const FaceGluing g0 = g.at(b.T, f0);
    const FaceGluing g1 = g.at(b.T, f1);
    // T' labels chosen so the face-0 gluing reads as the identity.
    const Perm4 betap = perm_compose(beta, perm_inverse(g0.perm));
    const Perm4 q = perm_compose(betap, perm_compose(g1.perm, perm_inverse(beta)));
    return std::tuple{lab, perm_inverse(betap), q, g0.tet, g1.tet};
  };
  auto [lab, labp, q, t0, t1] = build(i, j);
  if (t0 != t1 || t0 == b.T) return std::nullopt;
  b.Tp = t0;
  if (q == perm_identity()) {
    b.labT = lab;
    b.labTp = labp;
    b.twisted = false;
    return b;
  }
  if (q == kTwist) {
    b.labT = lab;
    b.labTp = labp;
    b.twisted = true;
    return b;
  }
  // The identity-glued face may be the other one.
  auto [lab2, labp2, q2, u0, u1] = build(j, i);
  (void)u0;
  (void)u1;
  if (q2 == kTwist) {
    b.labT = lab2;
    b.labTp = labp2;
    b.twisted = true;
    return b;
  }
  return std::nullopt;
}

int region_at(const Polyhedron& p, const CornerTable& ct, int v, const Perm4& lab, int a, int b) {
  (void)p;
  return ct.region[v * 6 + germ_index(lab[a], lab[b])];
}

Plan plan_inverse_lune(const Polyhedron& p, const Gluing& old, int r, const Gleam* gl) {
  const auto bg = analyze_bigon(p, old, r);
  if (!bg || bg->twisted) mismatch("region is not the bigon of a lune");
  if (gl && gl->doubled[r] != 0) mismatch("lune bigon must have zero gleam");
  const CornerTable ct = corner_table(p);
  const int da = region_at(p, ct, bg->T, bg->labT, 2, 3);
  const int db = region_at(p, ct, bg->Tp, bg->labTp, 2, 3);
  if (da == db) mismatch("the two halves of the lune belong to one region");
  const FaceGluing A = old.at(bg->T, bg->labT[2]);
  const FaceGluing B = old.at(bg->T, bg->labT[3]);
  const FaceGluing C = old.at(bg->Tp, bg->labTp[2]);
  const FaceGluing D = old.at(bg->Tp, bg->labTp[3]);
  for (const FaceGluing* x : {&A, &B, &C, &D})
    if (x->tet == bg->T || x->tet == bg->Tp) mismatch("lune pillow is glued to itself");
  Plan pl = start_plan(old, 0);
  pl.removed[bg->T] = pl.removed[bg->Tp] = true;
  // through local labels: A -> T -> T' -> C
  const Perm4 aToT = perm_compose(perm_inverse(bg->labT), perm_inverse(A.perm));
  const Perm4 tpToC = perm_compose(C.perm, bg->labTp);
  pl.ext.glue(A.tet, A.face, C.tet, perm_compose(tpToC, aToT));
  const Perm4 bToT = perm_compose(perm_inverse(bg->labT), perm_inverse(B.perm));
  const Perm4 tpToD = perm_compose(D.perm, bg->labTp);
  pl.ext.glue(B.tet, B.face, D.tet, perm_compose(tpToD, bToT));
  pl.ball.kind = MoveKind::Lune;
  pl.ball.tets = {{bg->T, bg->labT}, {bg->Tp, bg->labTp}};
  return pl;
}

Plan plan_inverse_one_two(const Polyhedron& p, const Gluing& old, int r) {
  const auto bg = analyze_bigon(p, old, r);
  if (!bg || !bg->twisted) mismatch("region is not the bigon of a 1-2 move");
  (void)p;
  Plan pl = start_plan(old, 1);
  pl.removed[bg->T] = pl.removed[bg->Tp] = true;
  const int U = pl.old_n;
  for (int k = 0; k < 4; ++k) {
    const bool onT = k < 2;
    const int tet = onT ? bg->T : bg->Tp;
    const Perm4& lab = onT ? bg->labT : bg->labTp;
    const int face = lab[2 + (k % 2)];
    pl.images[{tet, face}] = {U, perm_compose(perm_inverse(kOneTwoImage[k]), perm_inverse(lab))};
  }
  carry_images(pl, old);
  pl.ball.kind = MoveKind::OneTwo;
  pl.ball.tets = {{bg->T, bg->labT}, {bg->Tp, bg->labTp}};
  pl.ball.arrangement = perm_identity();
  return pl;
}

Plan plan_inverse_mp(const Polyhedron& p, const Gluing& old, int r, const Gleam* gl) {
  if (p.region(r).boundary.steps.size() != 3) mismatch("region is not a triangle");
  const auto cs = p.corners(r);
  if (cs[0].vertex == cs[1].vertex || cs[1].vertex == cs[2].vertex || cs[0].vertex == cs[2].vertex)
    mismatch("triangle must pass three distinct vertices");
  if (z2_gleam(p, r) != 0) mismatch("triangle has nonzero Z2-gleam");
  if (gl && gl->doubled[r] != 0) mismatch("triangle must have zero gleam");
  int u[3], up[3];
  {
    const Corner c = cs[0];
    int n = 0, xy[2];
    for (int x = 0; x < 4; ++x)
      if (x != c.in_slot && x != c.out_slot) xy[n++] = x;
    u[0] = xy[0];
    up[0] = xy[1];
  }
  for (int k = 0; k < 3; ++k) {
    const Corner c = cs[k];
    const FaceGluing fg = old.at(c.vertex, c.out_slot);
    if (fg.tet != cs[(k + 1) % 3].vertex) mismatch("triangle corners are not consecutive");
    const int nu = fg.perm[u[k]], nup = fg.perm[up[k]];
    if (k < 2) {
      u[k + 1] = nu;
      up[k + 1] = nup;
    } else if (nu != u[0]) {
      mismatch("triangle edge is reversed around its circuit");
    }
  }
  Plan pl = start_plan(old, 2);
  const int U = pl.old_n, Up = pl.old_n + 1;
  for (int k = 0; k < 3; ++k) pl.removed[cs[k].vertex] = true;
  for (int k = 0; k < 3; ++k) {
    const Corner c = cs[k];
    const int a = c.in_slot, b = c.out_slot;
    // s_k = b_k's opposite vertex: the outer vertex of the face toward T_{k+1} is label a
    Perm4 beta{}, betap{};
    beta[u[k]] = 0;
    beta[b] = 1 + (k + 2) % 3;
    beta[a] = 1 + k;
    beta[up[k]] = 1 + (k + 1) % 3;
    betap[up[k]] = 0;
    betap[b] = 1 + (k + 2) % 3;
    betap[a] = 1 + k;
    betap[u[k]] = 1 + (k + 1) % 3;
    pl.images[{c.vertex, up[k]}] = {U, beta};
    pl.images[{c.vertex, u[k]}] = {Up, betap};
  }
  pl.ext.glue(U, 0, Up, perm_identity());
  carry_images(pl, old);
  pl.ball.kind = MoveKind::MP23;
  for (int k = 0; k < 3; ++k) {
    const Corner c = cs[k];
    // local labels: 0 = u, 1 = u', 2/3 = the two outer vertices in slot order
    int o[2] = {std::min(c.in_slot, c.out_slot), std::max(c.in_slot, c.out_slot)};
    pl.ball.tets.push_back({c.vertex, Perm4{u[k], up[k], o[0], o[1]}});
  }
  return pl;
}

int free_region_version_orientation(int version) { return version == 2 ? -1 : 1; }

}  // namespace

Perm4 one_two_arrangement(const std::array<int, 2>& germ) {
  int a = std::min(germ[0], germ[1]), b = std::max(germ[0], germ[1]);
  if (a < 0 || b > 3 || a == b) throw ShadowError(ErrorCode::SiteMismatch, "1-2 germ must be two distinct slots");
  int c = -1, d = -1;
  for (int x = 0; x < 4; ++x) {
    if (x == a || x == b) continue;
    (c < 0 ? c : d) = x;
  }
  return Perm4{c, d, a, b};
}

int one_two_new_region_gleam2() { return 1; }

std::array<int, 6> one_two_gleam_shift2() { return {1, -1, -1, -1, -1, 1}; }

namespace {

MoveOutcome run_move(const Polyhedron& p, const Gleam* gl, const std::vector<int>* orientation, const MoveInstance& m) {
  if (gl && static_cast<int>(gl->doubled.size()) != p.region_count())
    throw ShadowError(ErrorCode::InvalidArgument, "gleam size differs from region count");
  const Gluing old = Gluing::from_polyhedron(p.data());
  const bool fwd = m.direction == Direction::Forward;
  int lune_region = -1, lune_vertex = -1;
  int inverse_region = -1;
  Plan pl;
  if (fwd) {
    switch (m.kind) {
      case MoveKind::Lune: pl = plan_lune(p, old, m.site, lune_region, lune_vertex); break;
      case MoveKind::MP23: pl = plan_mp(p, old, m.site); break;
      case MoveKind::OneTwo: {
        if (m.site.vertex < 0 || m.site.vertex >= p.vertex_count()) mismatch("1-2 vertex does not exist");
        pl = plan_one_two(old, m.site.vertex, one_two_arrangement(m.site.germ));
        break;
      }
    }
  } else {
    if (m.site.edge < 0 || m.site.edge >= p.edge_count() || m.site.wing < 0 || m.site.wing > 2)
      mismatch("inverse site does not exist");
    inverse_region = p.region_of(m.site.edge, m.site.wing);
    switch (m.kind) {
      case MoveKind::Lune: pl = plan_inverse_lune(p, old, inverse_region, gl); break;
      case MoveKind::MP23: pl = plan_inverse_mp(p, old, inverse_region, gl); break;
      case MoveKind::OneTwo: pl = plan_inverse_one_two(p, old, inverse_region); break;
    }
  }
  const Compacted cp = compact(pl);
  Polyhedron q(cp.g.to_polyhedron());
  const CornerTable ct = corner_table(q);

  MoveOutcome out{q, Gleam{}, {}, {}, {}, {}, -1, {}, {}};
  out.region_map.assign(p.region_count(), -1);
  out.region_sign.assign(p.region_count(), 0);
  std::vector<int> need(q.region_count(), 0);
  std::vector<int> preimages(q.region_count(), 0);
  bool conflict = false;
  for (int r = 0; r < p.region_count(); ++r) {
    const int o = orientation ? (*orientation)[r] : 1;
    for (const Corner& c : p.corners(r)) {
      const int in = o > 0 ? c.in_slot : c.out_slot;
      const int ou = o > 0 ? c.out_slot : c.in_slot;
      const auto im = map_corner(pl, cp, c.vertex, in, ou);
      if (!im) continue;
      const int idx = im->vertex * 6 + germ_index(im->in_slot, im->out_slot);
      const int nr = ct.region[idx];
      if (out.region_map[r] < 0) {
        out.region_map[r] = nr;
        const auto st = map_corner(pl, cp, c.vertex, c.in_slot, c.out_slot);
        out.region_sign[r] = ct.in_slot[idx] == st->in_slot ? 1 : -1;
      }
      const int want = ct.in_slot[idx] == im->in_slot ? 1 : -1;
      if (need[nr] == 0)
        need[nr] = want;
      else if (need[nr] != want)
        conflict = true;
    }
  }
  if (lune_region >= 0) {
    const int tp = cp.new_id[pl.ball.tets[1].vertex];
    out.region_map[lune_region] = ct.region[tp * 6 + germ_index(2, 3)];
    out.region_sign[lune_region] = ct.in_slot[tp * 6 + germ_index(2, 3)] == 2 ? 1 : -1;
  }
  for (int r = 0; r < p.region_count(); ++r) {
    if (out.region_map[r] >= 0)
      ++preimages[out.region_map[r]];
    else
      out.vanished = r;
  }
  if (!fwd && out.vanished != inverse_region) mismatch("inverse move removed an unexpected region");
  for (int nr = 0; nr < q.region_count(); ++nr)
    if (preimages[nr] == 0) out.created.push_back(nr);

  // ball located in the larger polyhedron
  out.ball = pl.ball;
  if (fwd) {
    for (auto& bt : out.ball.tets) bt.vertex = cp.new_id[bt.vertex];
  } else if (m.kind == MoveKind::OneTwo) {
    out.ball.before = {cp.new_id[pl.old_n], perm_identity()};
  }
  out.vertex_map.assign(p.vertex_count(), -1);
  for (int v = 0; v < p.vertex_count(); ++v) out.vertex_map[v] = cp.new_id[v];

  if (!gl) return out;
  const Gleam& gleam = *gl;
  out.gleam.doubled.assign(q.region_count(), 0);
  for (int r = 0; r < p.region_count(); ++r)
    if (out.region_map[r] >= 0) out.gleam.doubled[out.region_map[r]] += gleam.doubled[r];
  if (m.kind == MoveKind::Lune && fwd) {
    const int T = out.ball.tets[0].vertex;
    const int da = ct.region[T * 6 + germ_index(2, 3)];
    const int z = z2_gleam(q, da);
    out.gleam.doubled[da] = z;
    out.gleam.doubled[out.region_map[lune_region]] -= z;
  }
  if (m.kind == MoveKind::OneTwo) {
    const auto shift = one_two_gleam_shift2();
    const Polyhedron& big = fwd ? q : p;
    const CornerTable bigct = fwd ? ct : corner_table(p);
    for (int g = 0; g < 6; ++g) {
      const auto xy = germ_slots(g);
      const int side = xy[0] < 2 ? 0 : 1;
      const Perm4& im = kOneTwoImage[xy[0]];
      const BallTet& bt = out.ball.tets[side];
      const int br = bigct.region[bt.vertex * 6 + germ_index(bt.label[im[xy[0]]], bt.label[im[xy[1]]])];
      (void)big;
      if (fwd) {
        out.gleam.doubled[br] += shift[g];
      } else {
        const int nr = out.region_map[br];
        if (nr >= 0) out.gleam.doubled[nr] -= shift[g];
      }
    }
    if (fwd) {
      for (int nr : out.created) out.gleam.doubled[nr] = one_two_new_region_gleam2();
    } else if (gleam.doubled[inverse_region] != one_two_new_region_gleam2()) {
      mismatch("1-2 bigon carries the wrong gleam");
    }
  }
  if (!gleam_integrality_holds(q, out.gleam)) {
    throw ShadowError(ErrorCode::InvalidArgument, "internal: gleam parity broken by the rewrite");
  }

  if (orientation) {
    if (conflict) throw ShadowError(ErrorCode::UnbranchableInverse, "merged regions carry opposite orientations");
    out.orientation = need;
    if (fwd) {
      int nr = out.created.front();
      if (m.kind == MoveKind::Lune) {
        // The disc cut from the pushed region continues that region's orientation.
        const int T = out.ball.tets[0].vertex, Tp = out.ball.tets[1].vertex;
        const int g = germ_index(2, 3);
        const int da = ct.region[T * 6 + g];
        const int db = ct.region[Tp * 6 + g];
        const int dir_b = (ct.in_slot[Tp * 6 + g] == 2 ? 1 : -1) * out.orientation[db];
        out.orientation[da] = -dir_b * (ct.in_slot[T * 6 + g] == 2 ? 1 : -1);
        nr = ct.region[T * 6 + germ_index(0, 1)];
      } else if (out.created.size() != 1) {
        throw ShadowError(ErrorCode::InvalidArgument, "internal: created region count");
      }
      if (m.version == 0) {
        out.orientation[nr] = 1;
        if (!is_branching(q, out.orientation)) out.orientation[nr] = -1;
      } else {
        out.orientation[nr] = free_region_version_orientation(m.version);
      }
      if (!is_branching(q, out.orientation)) mismatch("requested branched version is not a branching");
    } else if (!is_branching(q, out.orientation)) {
      throw ShadowError(ErrorCode::UnbranchableInverse, "inherited orientations are not a branching");
    }
  }
  return out;
}

}  // namespace

MoveOutcome apply_move(const Polyhedron& p, const Gleam& gleam, const std::vector<int>* orientation,
                       const MoveInstance& m) {
  return run_move(p, &gleam, orientation, m);
}

MoveOutcome rewrite(const Polyhedron& p, const MoveInstance& m) { return run_move(p, nullptr, nullptr, m); }

Shadow apply(const Shadow& s, const MoveInstance& m) {
  MoveOutcome o = apply_move(s.poly, s.gleam, nullptr, m);
  return Shadow(std::move(o.poly), std::move(o.gleam));
}

BranchedShadow apply(const BranchedShadow& s, const MoveInstance& m) {
  MoveOutcome o = apply_move(s.poly, s.gleam, &s.branching.orientation, m);
  return BranchedShadow(std::move(o.poly), std::move(o.gleam), Branching{std::move(o.orientation)});
}

Site canonical_site(const Polyhedron& p, MoveKind kind, Direction dir, const Site& site) {
  Site c;
  if (dir == Direction::Inverse) {
    const int r = p.region_of(site.edge, site.wing);
    const Step s = p.region(r).boundary.steps.front();
    c.edge = s.edge;
    c.wing = s.wing;
    return c;
  }
  switch (kind) {
    case MoveKind::Lune: {
      const int r = p.region_of(site.edge, site.wing);
      const auto& steps = p.region(r).boundary.steps;
      const int len = static_cast<int>(steps.size());
      int k = p.position_of(site.edge, site.wing);
      if (site.side == 1) k = (k - 1 + len) % len;
      c.edge = steps[k].edge;
      c.wing = steps[k].wing;
      c.side = 0;
      return c;
    }
    case MoveKind::MP23:
      c.edge = site.edge;
      return c;
    case MoveKind::OneTwo:
      c.vertex = site.vertex;
      c.germ = {std::min(site.germ[0], site.germ[1]), std::max(site.germ[0], site.germ[1])};
      return c;
  }
  return c;
}

std::vector<Site> enumerate_sites(const Polyhedron& p, const Gleam& gleam, MoveKind kind, Direction dir) {
  std::vector<Site> out;
  const Gluing g = Gluing::from_polyhedron(p.data());
  if (dir == Direction::Forward) {
    switch (kind) {
      case MoveKind::Lune:
        for (int r = 0; r < p.region_count(); ++r) {
          const auto& steps = p.region(r).boundary.steps;
          const int len = static_cast<int>(steps.size());
          for (int k = 0; k < len; ++k) {
            if (len < 2 || steps[k].edge == steps[(k + 1) % len].edge) continue;
            Site s;
            s.edge = steps[k].edge;
            s.wing = steps[k].wing;
            out.push_back(s);
          }
        }
        break;
      case MoveKind::MP23:
        for (int e = 0; e < p.edge_count(); ++e) {
          if (p.edge(e).ends[0].vertex == p.edge(e).ends[1].vertex) continue;
          Site s;
          s.edge = e;
          out.push_back(s);
        }
        break;
      case MoveKind::OneTwo:
        for (int v = 0; v < p.vertex_count(); ++v)
          for (int gi = 0; gi < 6; ++gi) {
            Site s;
            s.vertex = v;
            s.germ = germ_slots(gi);
            out.push_back(s);
          }
        break;
    }
  } else {
    for (int r = 0; r < p.region_count(); ++r) {
      try {
        switch (kind) {
          case MoveKind::Lune: plan_inverse_lune(p, g, r, &gleam); break;
          case MoveKind::MP23: plan_inverse_mp(p, g, r, &gleam); break;
          case MoveKind::OneTwo: {
            plan_inverse_one_two(p, g, r);
            if (gleam.doubled[r] != one_two_new_region_gleam2()) continue;
            break;
          }
        }
      } catch (const ShadowError&) {
        continue;
      }
      Site s;
      s.edge = p.region(r).boundary.steps.front().edge;
      s.wing = p.region(r).boundary.steps.front().wing;
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](const Site& a, const Site& b) {
    return std::tie(a.edge, a.wing, a.side, a.vertex, a.germ) < std::tie(b.edge, b.wing, b.side, b.vertex, b.germ);
  });
  return out;
}

bool isomorphic(const Polyhedron& a, const Gleam& ga, const Polyhedron& b, const Gleam& gb) {
  if (a.vertex_count() != b.vertex_count() || a.region_count() != b.region_count()) return false;
  return canonical_code(a, ga.doubled) == canonical_code(b, gb.doubled);
}

std::string format_move(const MoveInstance& m) {
  std::ostringstream os;
  if (m.direction == Direction::Inverse) {
    os << "inv " << move_kind_name(m.kind) << " e" << m.site.edge << " w" << m.site.wing;
    return os.str();
  }
  switch (m.kind) {
    case MoveKind::Lune: os << "lune e" << m.site.edge << " w" << m.site.wing << " s" << m.site.side; break;
    case MoveKind::MP23: os << "mp23 e" << m.site.edge << " w" << m.site.wing; break;
    case MoveKind::OneTwo:
      os << "onetwo v" << m.site.vertex << " {" << m.site.germ[0] << "," << m.site.germ[1] << "}";
      break;
  }
  if (m.version != 0) os << " v" << m.version;
  return os.str();
}

MoveInstance parse_move(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tok;
  for (std::string t; is >> t;) tok.push_back(t);
  auto fail = [&](const std::string& why) -> MoveInstance {
    throw ShadowError(ErrorCode::ParseError, "bad move '" + line + "': " + why);
  };
  if (tok.empty()) return fail("empty");
  MoveInstance m;
  std::size_t at = 0;
  if (tok[0] == "inv") {
    m.direction = Direction::Inverse;
    at = 1;
  }
  if (at >= tok.size()) return fail("missing kind");
  const std::string kind = tok[at++];
  if (kind == "lune")
    m.kind = MoveKind::Lune;
  else if (kind == "mp23")
    m.kind = MoveKind::MP23;
  else if (kind == "onetwo")
    m.kind = MoveKind::OneTwo;
  else
    return fail("unknown kind");
  auto num = [&](const std::string& t, char prefix) -> int {
    if (t.size() < 2 || t[0] != prefix) fail(std::string("expected ") + prefix + "<n>");
    try {
      std::size_t used = 0;
      const int v = std::stoi(t.substr(1), &used);
      if (used != t.size() - 1) fail("trailing characters");
      return v;
    } catch (const std::logic_error&) {
      fail("not a number");
    }
    return 0;
  };
  std::vector<std::string> rest(tok.begin() + static_cast<long>(at), tok.end());
  if (m.direction == Direction::Inverse || m.kind != MoveKind::OneTwo) {
    if (rest.size() < 2) return fail("missing site");
    m.site.edge = num(rest[0], 'e');
    m.site.wing = num(rest[1], 'w');
    std::size_t k = 2;
    if (m.direction == Direction::Forward && m.kind == MoveKind::Lune) {
      if (rest.size() < 3) return fail("missing side");
      m.site.side = num(rest[2], 's');
      k = 3;
    }
    if (k < rest.size()) m.version = num(rest[k++], 'v');
    if (k != rest.size()) return fail("unexpected trailing tokens");
  } else {
    if (rest.size() < 2) return fail("missing site");
    m.site.vertex = num(rest[0], 'v');
    const std::string& g = rest[1];
    int a = -1, b = -1;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream gs(g);
    if (!(gs >> c1 >> a >> c2 >> b >> c3) || c1 != '{' || c2 != ',' || c3 != '}') return fail("germ must read {a,b}");
    m.site.germ = {a, b};
    if (rest.size() > 2) m.version = num(rest[2], 'v');
    if (rest.size() > 3) return fail("unexpected trailing tokens");
  }
  return m;
}


std::vector<int> carry_orientation(const MoveOutcome& out, const std::vector<int>& orientation, int version) {
  if (out.vanished >= 0) throw ShadowError(ErrorCode::InvalidArgument, "orientations are carried by forward moves");
  std::vector<int> o(out.poly.region_count(), 0);
  for (std::size_t r = 0; r < out.region_map.size(); ++r) o[out.region_map[r]] = orientation.at(r) * out.region_sign[r];
  const CornerTable ct = corner_table(out.poly);
  if (out.ball.kind == MoveKind::Lune) {
    const int T = out.ball.tets[0].vertex, Tp = out.ball.tets[1].vertex;
    const int g = germ_index(2, 3);
    const int dir_b = (ct.in_slot[Tp * 6 + g] == 2 ? 1 : -1) * o[ct.region[Tp * 6 + g]];
    o[ct.region[T * 6 + g]] = -dir_b * (ct.in_slot[T * 6 + g] == 2 ? 1 : -1);
  }
  o[versioned_region(out)] = free_region_version_orientation(version);
  return o;
}

int versioned_region(const MoveOutcome& out) {
  if (out.ball.kind == MoveKind::Lune && !out.ball.tets.empty()) {
    const CornerTable ct = corner_table(out.poly);
    const BallTet& bt = out.ball.tets[0];
    return ct.region[bt.vertex * 6 + germ_index(bt.label[0], bt.label[1])];
  }
  if (out.created.empty()) throw ShadowError(ErrorCode::InvalidArgument, "move created no region");
  return out.created.front();
}

namespace {

int preferred_slot(const Polyhedron& q, const std::vector<int>& o, int vertex, int slot) {
  const EdgeEnd ee = q.end_at(vertex, slot);
  return q.edge(ee.edge).wings[ee.end][preferred_wing(q, o, ee.edge).wing];
}

}  // namespace

FlavorInfo classify_flavor(const MoveOutcome& out) {
  FlavorInfo info;
  const MoveKind kind = out.ball.kind;
  if (out.orientation.empty() || kind == MoveKind::OneTwo) return info;
  const Polyhedron& q = out.poly;
  const std::vector<int>& o = out.orientation;
  const CornerTable ct = corner_table(q);
  const int nr = versioned_region(out);
  info.flavor = Flavor::Sliding;
  for (const Step& st : q.region(nr).boundary.steps)
    if (preferred_wing(q, o, st.edge).wing == st.wing) return info;
  const std::size_t corners = kind == MoveKind::Lune ? 1 : out.ball.tets.size();
  std::map<int, int> hits, third;
  for (std::size_t c = 0; c < corners; ++c) {
    const int T = out.ball.tets[c].vertex;
    int g = -1;
    for (int k = 0; k < 6 && g < 0; ++k)
      if (ct.region[T * 6 + k] == nr) g = k;
    if (g < 0) throw ShadowError(ErrorCode::InvalidArgument, "internal: new region misses a ball vertex");
    const auto ab = germ_slots(g);
    const bool stored_first = ct.in_slot[T * 6 + g] == ab[0];
    const int src = (stored_first ? 1 : -1) * o[nr] > 0 ? ab[0] : ab[1];
    const int tgt = ab[0] + ab[1] - src;
    const int x = preferred_slot(q, o, T, src);
    if (preferred_slot(q, o, T, tgt) != x) return info;
    const int y = 6 - ab[0] - ab[1] - x;
    const int gxy = germ_index(x, y);
    const int dxy = (ct.in_slot[T * 6 + gxy] == x ? 1 : -1) * o[ct.region[T * 6 + gxy]];
    const int u = dxy > 0 ? src : tgt;
    const int e = q.end_at(T, u).edge;
    ++hits[e];
    third[e] = ct.region[T * 6 + germ_index(u, y)];
  }
  info.flavor = Flavor::Bumping;
  if (kind == MoveKind::Lune) {
    info.delta = third.begin()->second;
    return info;
  }
  for (const auto& [e, n] : hits)
    if (n == 2) info.delta = third[e];
  if (info.delta < 0) throw ShadowError(ErrorCode::InvalidArgument, "internal: no triangle edge selected for Delta");
  return info;
}

const std::vector<OneTwoCase>& one_two_case_table() {
  static const std::vector<OneTwoCase> table = {
      {"1", "++++++", '+', 0, 0, 0, 0, 0, 0},
      {"2a", "+++++-", '+', -1, 6, -1, 6, -2, 6},
      {"2b", "+++++-", '-', -1, 5, -1, 5, -2, 5},
      {"3a", "++++-+", '+', -1, 5, -1, 5, -2, 5},
      {"3b", "++++-+", '-', -1, 6, -1, 6, -2, 6},
      {"4", "++++--", '-', 0, 0, 0, 0, 0, 0},
      {"5", "+++-++", '+', 1, 4, -1, 4, 0, 0},
      {"6", "++--++", '+', 1, 5, -1, 5, 0, 0},
      {"7a", "++-+-+", '+', -1, 4, -1, 4, -2, 4},
      {"7b", "++-+-+", '-', -1, 2, -1, 2, -2, 2},
      {"8", "+-++--", '-', 1, 2, -1, 2, 0, 0},
      {"9", "++---+", '+', 0, 0, 0, 0, 0, 0},
      {"10", "+--+--", '-', 1, 6, -1, 6, 0, 0},
      {"11", "+--+-+", '-', 0, 0, 0, 0, 0, 0},
      {"12a", "+----+", '+', -1, 2, -1, 2, -2, 2},
      {"12b", "+----+", '-', -1, 4, -1, 4, -2, 4},
  };
  return table;
}

namespace {

// Reference branching of a vertex, per corner in arrangement position order
// {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}: the sign of a corner running from the
// lower position to the higher one.
constexpr std::array<int, 6> kOneTwoReference = {1, -1, -1, -1, 1, -1};
// Table label R_k carried by each position corner.
constexpr std::array<int, 6> kOneTwoLabel = {1, 4, 6, 5, 2, 3};

const OneTwoCase* find_case(const std::string& signs, char r7) {
  for (const OneTwoCase& c : one_two_case_table())
    if (signs == c.signs && r7 == c.r7) return &c;
  return nullptr;
}

// Signs of R1..R6 (not normalised) at vertex U for the given arrangement.
std::string one_two_raw_signs(const CornerTable& ct, const std::vector<int>& o, int U,
                              const Perm4& arr, std::array<int, 7>* regions) {
  std::string signs(6, '?');
  for (int g = 0; g < 6; ++g) {
    const auto xy = germ_slots(g);
    const int idx = U * 6 + germ_index(arr[xy[0]], arr[xy[1]]);
    const int r = ct.region[idx];
    const int run = ct.in_slot[idx] == arr[xy[0]] ? 1 : -1;
    const int sg = o[r] * run * kOneTwoReference[g];
    signs[kOneTwoLabel[g] - 1] = sg > 0 ? '+' : '-';
    if (regions) (*regions)[kOneTwoLabel[g]] = r;
  }
  return signs;
}

char one_two_r7_sign(const BallTet& t, const CornerTable& ct, int o7) {
  return o7 * (ct.in_slot[t.vertex * 6 + germ_index(t.label[0], t.label[1])] == t.label[0] ? 1 : -1) > 0 ? '+'
                                                                                                        : '-';
}

void normalise(std::string& signs, char& r7) {
  if (signs[0] == '+') return;
  for (char& c : signs) c = c == '+' ? '-' : '+';
  r7 = r7 == '+' ? '-' : '+';
}

}  // namespace

OneTwoLabels one_two_labels(const Polyhedron& before, const std::vector<int>& before_orientation,
                            const MoveInstance& m, const MoveOutcome& out) {
  if (m.kind != MoveKind::OneTwo) throw ShadowError(ErrorCode::InvalidArgument, "1-2 labels need a 1-2 move");
  if (out.orientation.empty()) throw ShadowError(ErrorCode::InvalidArgument, "1-2 labels need a branched outcome");
  const bool fwd = m.direction == Direction::Forward;
  // small: the side with the single vertex U; big: the side with the bigon
  const Polyhedron& small = fwd ? before : out.poly;
  const Polyhedron& big = fwd ? out.poly : before;
  const std::vector<int>& small_o = fwd ? before_orientation : out.orientation;
  const std::vector<int>& big_o = fwd ? out.orientation : before_orientation;
  std::vector<int> to_big(small.region_count(), -1);
  int r7 = -1;
  if (fwd) {
    to_big = out.region_map;
    r7 = out.created.front();
  } else {
    for (int r = 0; r < big.region_count(); ++r)
      if (out.region_map[r] >= 0) to_big[out.region_map[r]] = r;
    r7 = out.vanished;
  }
  OneTwoLabels lab;
  const CornerTable ct = corner_table(small);
  std::array<int, 7> small_regions{};
  lab.signs = one_two_raw_signs(ct, small_o, out.ball.before.vertex, out.ball.before.label, &small_regions);
  for (int k = 1; k <= 6; ++k) lab.regions[k] = to_big[small_regions[k]];
  lab.r7 = one_two_r7_sign(out.ball.tets[0], corner_table(big), big_o[r7]);
  normalise(lab.signs, lab.r7);
  lab.row = find_case(lab.signs, lab.r7);
  return lab;
}

std::vector<BranchedVersion> branched_versions(const BranchedShadow& s, MoveKind kind, const Site& site) {
  std::vector<BranchedVersion> out;
  for (int version = 1; version <= 2; ++version) {
    const MoveInstance m{kind, Direction::Forward, site, version};
    std::optional<MoveOutcome> o;
    try {
      o = apply_move(s.poly, s.gleam, &s.branching.orientation, m);
    } catch (const ShadowError& e) {
      if (e.code() == ErrorCode::SiteMismatch) continue;
      throw;
    }
    BranchedVersion bv;
    bv.version = version;
    bv.orientation = free_region_version_orientation(version);
    if (kind == MoveKind::OneTwo) {
      const OneTwoLabels lab = one_two_labels(s.poly, s.branching.orientation, m, *o);
      if (!lab.row) throw ShadowError(ErrorCode::InvalidArgument, "1-2 version matches no table row");
      bv.case_label = lab.row->label;
    } else {
      const FlavorInfo fi = classify_flavor(*o);
      bv.flavor = fi.flavor;
      bv.delta = fi.delta;
    }
    out.push_back(bv);
  }
  return out;
}

namespace {

bool edge_branched(const Polyhedron& p, const std::vector<int>& o, int e) {
  const int a = induced_direction(p, o, e, 0), b = induced_direction(p, o, e, 1), c = induced_direction(p, o, e, 2);
  return !(a == b && b == c);
}

}  // namespace

PolyhedronData one_two_model_data() {
  PolyhedronData d;
  d.vertex_count = 5;
  const int e[10][10] = {
      {0, 0, 2, 2, 1, 2, 3, 3, 1, 0}, {0, 1, 4, 2, 0, 2, 3, 0, 1, 3}, {0, 2, 1, 3, 0, 1, 3, 0, 2, 1},
      {0, 3, 2, 3, 0, 1, 2, 0, 2, 1}, {1, 0, 2, 0, 1, 2, 3, 1, 2, 3}, {1, 1, 3, 3, 0, 2, 3, 0, 2, 1},
      {1, 2, 3, 2, 0, 1, 3, 0, 3, 1}, {2, 1, 4, 3, 0, 2, 3, 0, 2, 1}, {3, 0, 4, 0, 1, 2, 3, 1, 2, 3},
      {3, 1, 4, 1, 0, 2, 3, 0, 2, 3},
  };
  for (const auto& r : e) {
    Edge ed;
    ed.ends[0] = {r[0], r[1]};
    ed.ends[1] = {r[2], r[3]};
    ed.wings[0] = {r[4], r[5], r[6]};
    ed.wings[1] = {r[7], r[8], r[9]};
    d.edges.push_back(ed);
  }
  return d;
}

OneTwoEnumeration enumerate_one_two_cases() {
  const Polyhedron p(one_two_model_data());
  const int U = kOneTwoModelVertex;
  const CornerTable ct = corner_table(p);
  MoveInstance m;
  m.kind = MoveKind::OneTwo;
  m.site.vertex = U;
  m.site.germ = {0, 1};
  const MoveOutcome o = rewrite(p, m);
  const Polyhedron& q = o.poly;
  const CornerTable ctq = corner_table(q);
  const Perm4 arr = one_two_arrangement(m.site.germ);
  std::vector<int> ball_edges;
  for (const BallTet& bt : o.ball.tets)
    for (int sl = 0; sl < 4; ++sl) ball_edges.push_back(q.end_at(bt.vertex, sl).edge);
  const int r7 = o.created.front();
  OneTwoEnumeration res;
  std::map<std::string, std::set<char>> rows;
  for (int mask = 0; mask < (1 << p.region_count()); ++mask) {
    std::vector<int> op(p.region_count());
    for (int r = 0; r < p.region_count(); ++r) op[r] = (mask >> r & 1) ? -1 : 1;
    bool ok = true;
    for (int sl = 0; sl < 4; ++sl) ok = ok && edge_branched(p, op, p.end_at(U, sl).edge);
    if (!ok) continue;
    ++res.local_branchings;
    const std::string raw = one_two_raw_signs(ct, op, U, arr, nullptr);
    for (int o7 : {1, -1}) {
      std::vector<int> oq(q.region_count(), 1);
      for (int r = 0; r < p.region_count(); ++r) oq[o.region_map[r]] = op[r] * o.region_sign[r];
      oq[r7] = o7;
      bool ok2 = true;
      for (int e : ball_edges) ok2 = ok2 && edge_branched(q, oq, e);
      if (!ok2) continue;
      OneTwoRaw rv{raw, one_two_r7_sign(o.ball.tets[0], ctq, o7)};
      res.raw.push_back(rv);
      std::string sg = rv.signs;
      char c7 = rv.r7;
      normalise(sg, c7);
      rows[sg].insert(c7);
    }
  }
  for (const auto& [sg, set] : rows) {
    OneTwoCaseRow row;
    row.signs = sg;
    row.r7 = set.size() == 2 ? "±" : std::string(1, *set.begin());
    res.rows.push_back(row);
  }
  auto rank = [](const std::string& signs) {
    const auto& t = one_two_case_table();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (signs == t[i].signs) return i;
    return t.size();
  };
  std::stable_sort(res.rows.begin(), res.rows.end(),
                   [&](const OneTwoCaseRow& a, const OneTwoCaseRow& b) { return rank(a.signs) < rank(b.signs); });
  return res;
}

namespace {

struct BallAut {
  std::vector<int> tet;
  std::vector<Perm4> label;
};

// Automorphisms of the move ball: tetrahedron permutations with relabelings
// that carry the internal face gluings onto themselves.
std::vector<BallAut> ball_automorphisms(const MoveOutcome& out, const std::array<bool, 4>& internal) {
  const int n = static_cast<int>(out.ball.tets.size());
  const Polyhedron& q = out.poly;
  std::map<int, int> index;
  for (int c = 0; c < n; ++c) index[out.ball.tets[c].vertex] = c;
  auto local = [](const BallTet& bt, int slot) {
    for (int k = 0; k < 4; ++k)
      if (bt.label[k] == slot) return k;
    return -1;
  };
  std::vector<std::array<int, 4>> to(n);
  std::vector<std::array<Perm4, 4>> perm(n);
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      to[c][k] = -1;
      if (!internal[k]) continue;
      const BallTet& bt = out.ball.tets[c];
      const EdgeEnd ee = q.end_at(bt.vertex, bt.label[k]);
      const Edge& ed = q.edge(ee.edge);
      const VertexSlot other = ed.ends[1 - ee.end];
      const int d = index.at(other.vertex);
      const BallTet& bd = out.ball.tets[d];
      Perm4 ph{};
      ph[k] = local(bd, other.slot);
      for (int w = 0; w < 3; ++w) ph[local(bt, ed.wings[ee.end][w])] = local(bd, ed.wings[1 - ee.end][w]);
      to[c][k] = d;
      perm[c][k] = ph;
    }
  std::vector<Perm4> all;
  Perm4 pp = perm_identity();
  do all.push_back(pp);
  while (std::next_permutation(pp.begin(), pp.end()));
  std::vector<BallAut> auts;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    std::vector<int> idx(n, 0);
    while (true) {
      bool ok = true;
      for (int c = 0; c < n && ok; ++c)
        for (int k = 0; k < 4 && ok; ++k) {
          const Perm4& sc = all[idx[c]];
          const int pc = pi[c], pk = sc[k];
          if (to[c][k] < 0) {
            ok = to[pc][pk] < 0;
            continue;
          }
          const int d = to[c][k];
          if (to[pc][pk] != pi[d]) {
            ok = false;
            continue;
          }
          const Perm4& sd = all[idx[d]];
          for (int x = 0; x < 4; ++x)
            if (perm[pc][pk][sc[x]] != sd[perm[c][k][x]]) ok = false;
        }
      if (ok) {
        BallAut a{pi, {}};
        for (int c = 0; c < n; ++c) a.label.push_back(all[idx[c]]);
        auts.push_back(a);
      }
      int c = 0;
      while (c < n && ++idx[c] == 24) idx[c++] = 0;
      if (c == n) break;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return auts;
}

using BallSignature = std::vector<std::array<int, 6>>;

BallSignature ball_signature(const MoveOutcome& out) {
  const CornerTable ct = corner_table(out.poly);
  BallSignature sig(out.ball.tets.size());
  for (std::size_t c = 0; c < out.ball.tets.size(); ++c) {
    const BallTet& bt = out.ball.tets[c];
    for (int g = 0; g < 6; ++g) {
      const auto xy = germ_slots(g);
      const int idx = bt.vertex * 6 + germ_index(bt.label[xy[0]], bt.label[xy[1]]);
      sig[c][g] = (ct.in_slot[idx] == bt.label[xy[0]] ? 1 : -1) * out.orientation[ct.region[idx]];
    }
  }
  return sig;
}

BallSignature transform(const BallSignature& s, const BallAut& a, int reverse) {
  BallSignature r(s.size());
  for (std::size_t c = 0; c < s.size(); ++c)
    for (int g = 0; g < 6; ++g) {
      const auto xy = germ_slots(g);
      const int x = a.label[c][xy[0]], y = a.label[c][xy[1]];
      r[a.tet[c]][germ_index(x, y)] = s[c][g] * (x < y ? 1 : -1) * reverse;
    }
  return r;
}

}  // namespace

VersionCensus version_census(MoveKind kind, const std::vector<Polyhedron>& corpus, int region_bound) {
  if (kind == MoveKind::OneTwo) throw ShadowError(ErrorCode::InvalidArgument, "use enumerate_one_two_cases for 1-2");
  const std::array<bool, 4> internal =
      kind == MoveKind::Lune ? std::array<bool, 4>{true, true, false, false} : std::array<bool, 4>{false, false, true, true};
  VersionCensus census;
  std::vector<BallAut> auts;
  std::set<std::pair<BallSignature, bool>> seen;
  for (const Polyhedron& p : corpus) {
    if (p.region_count() > region_bound) continue;
    const Gleam g = minimal_gleam(p);
    const auto sites = enumerate_sites(p, g, kind, Direction::Forward);
    for (const Branching& b : enumerate_branchings(p, region_bound)) {
      for (const Site& s0 : sites)
        for (int side = 0; side < (kind == MoveKind::Lune ? 2 : 1); ++side) {
          Site site = s0;
          site.side = side;
          for (int version = 1; version <= 2; ++version) {
            const MoveInstance m{kind, Direction::Forward, site, version};
            std::optional<MoveOutcome> o;
            try {
              o = apply_move(p, g, &b.orientation, m);
            } catch (const ShadowError& e) {
              if (e.code() == ErrorCode::SiteMismatch) continue;
              throw;
            }
            ++census.raw_versions;
            if (auts.empty()) auts = ball_automorphisms(*o, internal);
            seen.insert({ball_signature(*o), classify_flavor(*o).flavor == Flavor::Bumping});
          }
        }
    }
  }
  census.automorphisms = static_cast<int>(auts.size());
  std::set<BallSignature> done;
  for (const auto& [sig, bump] : seen) {
    if (done.count(sig)) continue;
    (bump ? census.bumping : census.sliding) += 1;
    for (const BallAut& a : auts)
      for (int rev : {1, -1}) done.insert(transform(sig, a, rev));
  }
  return census;
}
}  // namespace shadows
