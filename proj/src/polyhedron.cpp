#include "shadows/polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace shadows {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonBijectiveAttachment: return "NonBijectiveAttachment";
    case ErrorCode::DisconnectedSingularSet: return "DisconnectedSingularSet";
    case ErrorCode::ValenceViolation: return "ValenceViolation";
    case ErrorCode::TraceIncomplete: return "TraceIncomplete";
    case ErrorCode::TooManyRegions: return "TooManyRegions";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::SiteMismatch: return "SiteMismatch";
    case ErrorCode::UnbranchableInverse: return "UnbranchableInverse";
    case ErrorCode::ScaleMismatch: return "ScaleMismatch";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::TorsionObstruction: return "TorsionObstruction";
    case ErrorCode::TorsionCheckFailed: return "TorsionCheckFailed";
    case ErrorCode::ReplayFailure: return "ReplayFailure";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Circuit Circuit::reversed() const {
  Circuit c;
  c.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) c.steps.push_back({it->edge, it->wing, -it->dir});
  return c;
}

namespace {

std::string cell(const char* what, int a) {
  std::ostringstream os;
  os << what << ' ' << a;
  return os.str();
}

// Checks attachments only. Fills slot_owner when the end attachment is a bijection.
void check_attachments(const PolyhedronData& d, ValidationReport& rep, std::vector<EdgeEnd>& owner) {
  if (d.vertex_count < 1) {
    rep.violations.push_back({ErrorCode::ValenceViolation, "polyhedron has no vertices"});
    return;
  }
  const int n_slots = 4 * d.vertex_count;
  if (static_cast<int>(d.edges.size()) * 2 != n_slots) {
    std::ostringstream os;
    os << "edge count " << d.edges.size() << " differs from 2*vertex_count = " << 2 * d.vertex_count;
    rep.violations.push_back({ErrorCode::ValenceViolation, os.str()});
  }
  owner.assign(n_slots, EdgeEnd{-1, -1});
  std::vector<int> uses(n_slots, 0);
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    for (int k = 0; k < 2; ++k) {
      const VertexSlot vs = d.edges[e].ends[k];
      if (vs.vertex < 0 || vs.vertex >= d.vertex_count || vs.slot < 0 || vs.slot > 3) {
        std::ostringstream os;
        os << "edge " << e << " end " << k << " attached to nonexistent (" << vs.vertex << "," << vs.slot << ")";
        rep.violations.push_back({ErrorCode::ValenceViolation, os.str()});
        continue;
      }
      const int idx = vs.vertex * 4 + vs.slot;
      if (uses[idx]++ == 0) owner[idx] = {e, k};
    }
  }
  for (int idx = 0; idx < n_slots; ++idx) {
    if (uses[idx] != 1) {
      std::ostringstream os;
      os << "slot (" << idx / 4 << "," << idx % 4 << ") carries " << uses[idx] << " edge ends";
      rep.violations.push_back({ErrorCode::ValenceViolation, os.str()});
    }
  }
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    for (int k = 0; k < 2; ++k) {
      const int own = d.edges[e].ends[k].slot;
      std::array<int, 3> w = d.edges[e].wings[k];
      std::sort(w.begin(), w.end());
      std::array<int, 3> expect{};
      int n = 0;
      for (int s = 0; s < 4; ++s)
        if (s != own) expect[n++] = s;
      if (w != expect) {
        std::ostringstream os;
        os << "edge " << e << " end " << k << " wings do not biject onto the slots complementary to " << own;
        rep.violations.push_back({ErrorCode::NonBijectiveAttachment, os.str()});
      }
    }
  }
}

void check_connected(const PolyhedronData& d, ValidationReport& rep) {
  std::vector<int> parent(d.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : d.edges) parent[find(e.ends[0].vertex)] = find(e.ends[1].vertex);
  for (int v = 1; v < d.vertex_count; ++v) {
    if (find(v) != find(0)) {
      rep.violations.push_back({ErrorCode::DisconnectedSingularSet, cell("vertex", v) + " is not connected to vertex 0"});
    }
  }
}

std::vector<Region> trace_with(const PolyhedronData& d, const std::vector<EdgeEnd>& owner) {
  const int m = static_cast<int>(d.edges.size());
  std::vector<int> region_of(m * 3, -1);
  std::vector<Region> out;
  for (int e = 0; e < m; ++e) {
    for (int w = 0; w < 3; ++w) {
      if (region_of[e * 3 + w] >= 0) continue;
      Region r;
      r.id = static_cast<int>(out.size());
      const Step start{e, w, 1};
      Step s = start;
      do {
        int& slot = region_of[s.edge * 3 + s.wing];
        if (slot >= 0) {
          std::ostringstream os;
          os << "wing (" << s.edge << "," << s.wing << ") is reached twice while tracing region " << r.id;
          throw ShadowError(ErrorCode::TraceIncomplete, os.str());
        }
        slot = r.id;
        r.boundary.steps.push_back(s);
        s = next_step(d, owner, s);
        if (static_cast<int>(r.boundary.steps.size()) > 3 * m) {
          throw ShadowError(ErrorCode::TraceIncomplete, "circuit does not close");
        }
      } while (s != start);
      out.push_back(std::move(r));
    }
  }
  for (int i = 0; i < m * 3; ++i) {
    if (region_of[i] < 0) {
      throw ShadowError(ErrorCode::TraceIncomplete, cell("wing", i) + " is unreached");
    }
  }
  return out;
}

}  // namespace

Step next_step(const PolyhedronData& d, const std::vector<EdgeEnd>& owner, const Step& s) {
  const Edge& e = d.edges[s.edge];
  const int k = s.dir > 0 ? 1 : 0;
  const VertexSlot at = e.ends[k];
  const int j = e.wings[k][s.wing];
  const EdgeEnd nxt = owner[at.vertex * 4 + j];
  const Edge& e2 = d.edges[nxt.edge];
  int w2 = 0;
  while (e2.wings[nxt.end][w2] != at.slot) ++w2;
  return Step{nxt.edge, w2, nxt.end == 0 ? 1 : -1};
}

ValidationReport validate(const PolyhedronData& data) {
  ValidationReport rep;
  std::vector<EdgeEnd> owner;
  check_attachments(data, rep, owner);
  if (!rep.ok()) return rep;
  check_connected(data, rep);
  try {
    trace_with(data, owner);
  } catch (const ShadowError& err) {
    rep.violations.push_back({err.code(), err.what()});
  }
  return rep;
}

std::vector<Region> trace_regions(const PolyhedronData& data) {
  ValidationReport rep;
  std::vector<EdgeEnd> owner;
  check_attachments(data, rep, owner);
  if (!rep.ok()) throw ShadowError(rep.violations.front().code, rep.violations.front().message);
  return trace_with(data, owner);
}

Polyhedron::Polyhedron(PolyhedronData data) : data_(std::move(data)) {
  ValidationReport rep;
  check_attachments(data_, rep, slot_owner_);
  if (rep.ok()) check_connected(data_, rep);
  if (!rep.ok()) throw ShadowError(rep.violations.front().code, rep.violations.front().message);
  regions_ = trace_with(data_, slot_owner_);
  wing_region_.assign(edge_count() * 3, -1);
  wing_position_.assign(edge_count() * 3, -1);
  for (const Region& r : regions_) {
    for (int k = 0; k < static_cast<int>(r.boundary.steps.size()); ++k) {
      const Step& s = r.boundary.steps[k];
      wing_region_[s.edge * 3 + s.wing] = r.id;
      wing_position_[s.edge * 3 + s.wing] = k;
    }
  }
}

int Polyhedron::stored_dir(int edge, int wing) const {
  const Region& r = regions_[region_of(edge, wing)];
  return r.boundary.steps[position_of(edge, wing)].dir;
}

int Polyhedron::wing_of_slot(int edge, int end, int slot) const {
  const auto& w = data_.edges.at(edge).wings[end];
  for (int i = 0; i < 3; ++i)
    if (w[i] == slot) return i;
  throw ShadowError(ErrorCode::InvalidArgument, "slot is not a wing slot of this edge end");
}

std::vector<Corner> Polyhedron::corners(int region) const {
  const auto& steps = regions_.at(region).boundary.steps;
  std::vector<Corner> out;
  out.reserve(steps.size());
  for (const Step& s : steps) {
    const Edge& e = data_.edges[s.edge];
    const int k = s.dir > 0 ? 1 : 0;
    out.push_back({e.ends[k].vertex, e.ends[k].slot, e.wings[k][s.wing]});
  }
  return out;
}

int euler_characteristic(const Polyhedron& p) { return p.vertex_count() - p.edge_count() + p.region_count(); }

int z2_gleam(const Polyhedron& p, int region) {
  const auto& steps = p.region(region).boundary.steps;
  const int n = static_cast<int>(steps.size());
  int pages[2];
  {
    int c = 0;
    for (int w = 0; w < 3; ++w)
      if (w != steps[0].wing) pages[c++] = w;
  }
  const int first = pages[0];
  for (int k = 0; k < n; ++k) {
    const Step& s = steps[k];
    const Step& t = steps[(k + 1) % n];
    const int arrive = s.dir > 0 ? 1 : 0;
    const int depart = t.dir > 0 ? 0 : 1;
    for (int& pg : pages) {
      const int slot = p.edge(s.edge).wings[arrive][pg];
      pg = p.wing_of_slot(t.edge, depart, slot);
    }
  }
  return pages[0] == first ? 0 : 1;
}

std::vector<int> z2_gleams(const Polyhedron& p) {
  std::vector<int> out(p.region_count());
  for (int r = 0; r < p.region_count(); ++r) out[r] = z2_gleam(p, r);
  return out;
}

}  // namespace shadows
