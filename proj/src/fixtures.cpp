#include "shadows/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "shadows/gluing.hpp"

namespace shadows {

std::vector<Polyhedron> enumerate_polyhedra(int vertices) {
  if (vertices < 1 || vertices > 3) throw ShadowError(ErrorCode::InvalidArgument, "enumeration supports 1 to 3 vertices");
  std::vector<Perm4> perms;
  Perm4 pp = perm_identity();
  do perms.push_back(pp);
  while (std::next_permutation(pp.begin(), pp.end()));
  const int faces = 4 * vertices;
  std::vector<int> partner(faces, -1);
  std::vector<std::pair<int, int>> pairs;
  std::set<std::vector<int>> seen;
  std::vector<Polyhedron> out;
  auto emit_all = [&] {
    // every face pairing of the matched faces: perm must send face to face
    std::vector<std::vector<Perm4>> choice;
    for (const auto& [f, h] : pairs) {
      std::vector<Perm4> c;
      for (const Perm4& q : perms)
        if (q[f % 4] == h % 4) c.push_back(q);
      choice.push_back(std::move(c));
    }
    std::vector<std::size_t> idx(pairs.size(), 0);
    while (true) {
      Gluing g(vertices);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        g.glue(pairs[k].first / 4, pairs[k].first % 4, pairs[k].second / 4, choice[k][idx[k]]);
      const PolyhedronData d = g.to_polyhedron();
      if (validate(d).ok()) {
        Polyhedron p(d);
        if (seen.insert(canonical_code(p)).second) out.push_back(std::move(p));
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choice[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  };
  std::function<void()> rec = [&] {
    int f = -1;
    for (int i = 0; i < faces && f < 0; ++i)
      if (partner[i] < 0) f = i;
    if (f < 0) {
      emit_all();
      return;
    }
    for (int h = f + 1; h < faces; ++h) {
      if (partner[h] >= 0) continue;
      partner[f] = h;
      partner[h] = f;
      pairs.push_back({f, h});
      rec();
      pairs.pop_back();
      partner[f] = partner[h] = -1;
    }
  };
  rec();
  return out;
}

BranchedShadow random_orbit(const BranchedShadow& s, std::uint64_t seed, int steps, std::vector<MoveInstance>* log) {
  std::mt19937_64 rng(seed);
  BranchedShadow cur = s;
  for (int i = 0; i < steps; ++i) {
    std::vector<MoveInstance> cands;
    for (MoveKind k : {MoveKind::Lune, MoveKind::MP23, MoveKind::OneTwo}) {
      for (const Site& site : enumerate_sites(cur.poly, cur.gleam, k, Direction::Forward))
        for (int side = 0; side < (k == MoveKind::Lune ? 2 : 1); ++side)
          for (int version = 1; version <= 2; ++version) {
            Site st = site;
            st.side = side;
            cands.push_back({k, Direction::Forward, st, version});
          }
      for (const Site& site : enumerate_sites(cur.poly, cur.gleam, k, Direction::Inverse))
        cands.push_back({k, Direction::Inverse, site, 0});
    }
    std::shuffle(cands.begin(), cands.end(), rng);
    bool moved = false;
    for (const MoveInstance& m : cands) {
      try {
        cur = apply(cur, m);
      } catch (const ShadowError& e) {
        if (e.code() == ErrorCode::SiteMismatch || e.code() == ErrorCode::UnbranchableInverse) continue;
        throw;
      }
      if (log) log->push_back(m);
      moved = true;
      break;
    }
    if (!moved) break;
  }
  return cur;
}

namespace {

struct Builtin {
  const char* name;
  const char* description;
  const char* text;
};

#include "fixtures_data.inc"

std::map<std::string, Fixture> load_catalog() {
  std::map<std::string, Fixture> out;
  for (const Builtin& b : kBuiltins) out[b.name] = Fixture{b.name, b.description, parse_document(b.text)};
  if (const char* dir = std::getenv("SHADOWS_CATALOG")) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
      throw ShadowError(ErrorCode::InvalidArgument, std::string("SHADOWS_CATALOG is not a directory: ") + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.path().extension() == ".shadow") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) {
      const std::string name = f.stem().string();
      try {
        out[name] = Fixture{name, "from " + f.string(), parse_document(read_file(f.string()))};
      } catch (const ShadowError& e) {
        throw ShadowError(e.code(), f.string() + ": " + e.what());
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, f] : load_catalog()) names.push_back(name);
  return names;
}

Fixture fixture(const std::string& name) {
  if (name.rfind("orbit:", 0) == 0) {
    const auto a = name.find(':', 6);
    const auto b = a == std::string::npos ? a : name.find(':', a + 1);
    if (b == std::string::npos) throw ShadowError(ErrorCode::InvalidArgument, "orbit fixtures are orbit:<base>:<seed>:<steps>");
    const Fixture base = fixture(name.substr(6, a - 6));
    const std::uint64_t seed = std::stoull(name.substr(a + 1, b - a - 1));
    const int steps = std::stoi(name.substr(b + 1));
    std::vector<MoveInstance> log;
    const BranchedShadow s = random_orbit(branched_of(base.doc), seed, steps, &log);
    return Fixture{name, std::to_string(log.size()) + " random moves from " + base.name, document_of(s)};
  }
  const auto cat = load_catalog();
  const auto it = cat.find(name);
  if (it == cat.end()) throw ShadowError(ErrorCode::InvalidArgument, "unknown fixture: " + name);
  return it->second;
}

std::vector<Fixture> catalog() {
  std::vector<Fixture> out;
  for (auto& [name, f] : load_catalog()) out.push_back(std::move(f));
  return out;
}

}  // namespace shadows
