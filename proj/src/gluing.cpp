#include "shadows/gluing.hpp"

#include <algorithm>
#include <deque>

namespace shadows {

void Gluing::glue(int tet, int face, int other, const Perm4& perm) {
  const int oface = perm[face];
  faces_.at(tet)[face] = {other, oface, perm};
  faces_.at(other)[oface] = {tet, face, perm_inverse(perm)};
}

bool Gluing::complete() const {
  for (const auto& t : faces_)
    for (const auto& f : t)
      if (!f.glued()) return false;
  return true;
}

Gluing Gluing::from_polyhedron(const PolyhedronData& data) {
  Gluing g(data.vertex_count);
  for (const Edge& e : data.edges) {
    Perm4 p{};
    p[e.ends[0].slot] = e.ends[1].slot;
    for (int w = 0; w < 3; ++w) p[e.wings[0][w]] = e.wings[1][w];
    g.glue(e.ends[0].vertex, e.ends[0].slot, e.ends[1].vertex, p);
  }
  return g;
}

PolyhedronData Gluing::to_polyhedron() const {
  if (!complete()) throw ShadowError(ErrorCode::InvalidArgument, "gluing has unpaired faces");
  PolyhedronData d;
  d.vertex_count = size();
  for (int t = 0; t < size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& fg = faces_[t][f];
      if (std::pair(fg.tet, fg.face) < std::pair(t, f)) continue;
      Edge e;
      e.ends[0] = {t, f};
      e.ends[1] = {fg.tet, fg.face};
      int n = 0;
      for (int s = 0; s < 4; ++s) {
        if (s == f) continue;
        e.wings[0][n] = s;
        e.wings[1][n] = fg.perm[s];
        ++n;
      }
      d.edges.push_back(e);
    }
  }
  return d;
}

int germ_index(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  if (i == j || i < 0 || j > 3) throw ShadowError(ErrorCode::InvalidArgument, "germ needs two distinct slots");
  return table[i][j];
}

std::array<int, 2> germ_slots(int g) {
  static constexpr std::array<std::array<int, 2>, 6> slots = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return slots.at(g);
}

CornerTable corner_table(const Polyhedron& p) {
  CornerTable ct;
  ct.region.assign(p.vertex_count() * 6, -1);
  ct.in_slot.assign(p.vertex_count() * 6, -1);
  for (int r = 0; r < p.region_count(); ++r) {
    for (const Corner& c : p.corners(r)) {
      const int idx = c.vertex * 6 + germ_index(c.in_slot, c.out_slot);
      ct.region[idx] = r;
      ct.in_slot[idx] = c.in_slot;
    }
  }
  return ct;
}

namespace {

std::vector<Perm4> all_perms() {
  std::vector<Perm4> out;
  Perm4 p = perm_identity();
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<int> canonical_code(const Polyhedron& p, const std::vector<int>& gleam2,
                                const std::vector<int>& orientation) {
  const Gluing g = Gluing::from_polyhedron(p.data());
  const int n = g.size();
  std::vector<int> best;
  static const std::vector<Perm4> perms = all_perms();
  std::vector<int> order, new_id(n);
  std::vector<Perm4> sigma(n);
  for (int t0 = 0; t0 < n; ++t0) {
    for (const Perm4& s0 : perms) {
      std::fill(new_id.begin(), new_id.end(), -1);
      order.assign(1, t0);
      new_id[t0] = 0;
      sigma[t0] = s0;
      std::vector<int> code;
      code.reserve(n * 24 + p.region_count() * 2 + 2);
      code.push_back(n);
      for (std::size_t k = 0; k < order.size(); ++k) {
        const int t = order[k];
        const Perm4 inv = perm_inverse(sigma[t]);
        for (int fn = 0; fn < 4; ++fn) {
          const FaceGluing& fg = g.at(t, inv[fn]);
          if (new_id[fg.tet] < 0) {
            new_id[fg.tet] = static_cast<int>(order.size());
            order.push_back(fg.tet);
            sigma[fg.tet] = perm_compose(sigma[t], perm_inverse(fg.perm));
          }
          code.push_back(new_id[fg.tet]);
          const Perm4 np = perm_compose(sigma[fg.tet], perm_compose(fg.perm, inv));
          code.insert(code.end(), np.begin(), np.end());
        }
      }
      if (!gleam2.empty() || !orientation.empty()) {
        // Each region is keyed by its least corner in the new labels.
        std::vector<std::array<int, 4>> keyed;
        for (int r = 0; r < p.region_count(); ++r) {
          std::array<int, 4> key{1 << 30, 0, 0, 0};
          for (const Corner& c : p.corners(r)) {
            const Perm4& s = sigma[c.vertex];
            const int gidx = germ_index(s[c.in_slot], s[c.out_slot]);
            const std::array<int, 2> cand{new_id[c.vertex], gidx};
            if (cand[0] < key[0] || (cand[0] == key[0] && cand[1] < key[1])) {
              int in_new = s[c.in_slot];
              if (!orientation.empty() && orientation[r] < 0) in_new = s[c.out_slot];
              key = {cand[0], cand[1], gleam2.empty() ? 0 : gleam2[r], orientation.empty() ? 0 : in_new};
            }
          }
          keyed.push_back(key);
        }
        std::sort(keyed.begin(), keyed.end());
        for (const auto& key : keyed) {
          code.push_back(key[2]);
          code.push_back(key[3]);
        }
      }
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

Relabeling random_relabel(const Polyhedron& p, std::mt19937_64& rng) {
  const int n = p.vertex_count();
  const int m = p.edge_count();
  std::vector<int> vperm(n), eperm(m);
  for (int i = 0; i < n; ++i) vperm[i] = i;
  for (int i = 0; i < m; ++i) eperm[i] = i;
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::shuffle(eperm.begin(), eperm.end(), rng);
  std::vector<Perm4> tau(n);
  for (auto& t : tau) {
    t = perm_identity();
    std::shuffle(t.begin(), t.end(), rng);
  }
  Relabeling out;
  out.data.vertex_count = n;
  out.data.edges.resize(m);
  for (int e = 0; e < m; ++e) {
    const Edge& old = p.edge(e);
    const bool swap_ends = (rng() & 1) != 0;
    std::array<int, 3> rho{0, 1, 2};
    std::shuffle(rho.begin(), rho.end(), rng);
    Edge ne;
    for (int k = 0; k < 2; ++k) {
      const int ok = swap_ends ? 1 - k : k;
      const VertexSlot vs = old.ends[ok];
      ne.ends[k] = {vperm[vs.vertex], tau[vs.vertex][vs.slot]};
      for (int w = 0; w < 3; ++w) ne.wings[k][w] = tau[vs.vertex][old.wings[ok][rho[w]]];
    }
    out.data.edges[eperm[e]] = ne;
  }
  const Polyhedron q(out.data);
  const CornerTable ct = corner_table(q);
  out.region_map.resize(p.region_count());
  out.orientation_factor.resize(p.region_count());
  for (int r = 0; r < p.region_count(); ++r) {
    const Corner c = p.corners(r).front();
    const Perm4& t = tau[c.vertex];
    const int idx = vperm[c.vertex] * 6 + germ_index(t[c.in_slot], t[c.out_slot]);
    out.region_map[r] = ct.region[idx];
    out.orientation_factor[r] = ct.in_slot[idx] == t[c.in_slot] ? 1 : -1;
  }
  return out;
}

}  // namespace shadows
