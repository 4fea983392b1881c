// shadowcalc: command-line front end for the shadows library.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "shadows/blowup.hpp"
#include "shadows/cxpoints.hpp"
#include "shadows/fixtures.hpp"
#include "shadows/invariants.hpp"
#include "shadows/io.hpp"
#include "shadows/tables.hpp"

using namespace shadows;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

// Paths: a file, `-` for stdin, or `fixture:<name>`.
ShadowDocument load(const std::string& path) {
  if (path.rfind("fixture:", 0) == 0) return fixture(path.substr(8)).doc;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return parse_document(os.str());
  }
  return parse_document(read_file(path));
}

std::string signs(const std::vector<int>& o) {
  std::string s;
  for (int x : o) s += x > 0 ? '+' : '-';
  return s;
}

std::string key_string(const CochainClass& c) {
  IntVector rep = c.rep;
  const IntVector key = c.pres->class_key(rep);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < key.size(); ++i) os << (i ? " " : "") << key[i];
  os << ']';
  return os.str();
}

int cmd_validate(const std::string& path) {
  ShadowDocument doc;
  try {
    doc = load(path);
  } catch (const ShadowError& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    std::cout << e.what() << "\ninvalid\n";
    return kExitInvalid;
  }
  const ValidationReport rep = validate(doc.poly);
  if (!rep.ok()) {
    for (const Violation& v : rep.violations) std::cout << error_code_name(v.code) << ": " << v.message << '\n';
    std::cout << "invalid\n";
    return kExitInvalid;
  }
  const Polyhedron p(doc.poly);
  std::cout << "vertices " << p.vertex_count() << "  edges " << p.edge_count() << "  regions " << p.region_count()
            << "  chi " << euler_characteristic(p) << '\n';
  const Shadow s = shadow_of(doc);
  if (!gleam_integrality_holds(s.poly, s.gleam)) {
    std::cout << "gleam parity differs from the Z2-gleam\ninvalid\n";
    return kExitInvalid;
  }
  if (doc.orientation) {
    if (!is_branching(p, *doc.orientation)) {
      std::cout << "orientation is not a branching\ninvalid\n";
      return kExitInvalid;
    }
    std::cout << "branched\n";
  }
  if (!doc.points.empty()) {
    validate(decorated_of(doc));
    std::cout << doc.points.size() << " complex points\n";
  }
  std::cout << "valid\n";
  return kExitOk;
}

int cmd_branch(const std::string& path, const std::string& mode, std::uint64_t seed, int budget) {
  const ShadowDocument doc = load(path);
  const Shadow s = shadow_of(doc);
  if (mode == "exhaustive") {
    const auto all = enumerate_branchings(s.poly);
    for (std::size_t k = 0; k < all.size(); ++k) std::cout << "branching " << k << ": " << signs(all[k].orientation) << '\n';
    std::cout << "branchable: " << (all.empty() ? "no" : "yes") << " (" << all.size() << " branchings)\n";
    return kExitOk;
  }
  const std::vector<int> o = doc.orientation ? *doc.orientation : descend_orientation(s.poly, seed);
  const BlowupResult res = branch_by_blowup(s, o, budget, seed);
  std::cout << "# blow-up from " << signs(o) << ": " << res.moves.size() << " moves\n";
  std::cout << "# branchable: " << (res.moves.empty() ? "yes" : "after moves") << '\n';
  for (const MoveInstance& m : res.moves) std::cout << "# move " << format_move(m) << '\n';
  std::cout << print_document(document_of(res.result));
  return kExitOk;
}

int cmd_apply(const std::string& path, const std::string& script, bool check) {
  const ShadowDocument doc = load(path);
  const std::vector<MoveInstance> moves = parse_script(read_file(script));
  int status = kExitOk;
  auto structural = [&](const Polyhedron& p, const Gleam& g, int chi0) {
    const bool ok = euler_characteristic(p) == chi0 && p.edge_count() == 2 * p.vertex_count() &&
                    gleam_integrality_holds(p, g) && validate(p.data()).ok();
    if (!ok) status = kExitInvalid;
    return std::string(ok ? "ok" : "FAIL");
  };
  if (doc.orientation) {
    BranchedShadow cur = branched_of(doc);
    const int chi0 = euler_characteristic(cur.poly);
    for (std::size_t i = 0; i < moves.size(); ++i) {
      std::ostringstream line;
      line << "# step " << i + 1 << ": " << format_move(moves[i]);
      if (check) {
        const SequenceAlpha sa = alpha_of_sequence(cur, {moves[i]});
        cur = sa.final_shadow;
        line << "  V " << cur.poly.vertex_count() << "  chi " << euler_characteristic(cur.poly)
             << "  structure " << structural(cur.poly, cur.gleam, chi0) << "  alpha " << sa.alpha.to_string()
             << "  2alpha=dc1 " << (class_equal((2 * sa.alpha).doubled(), sa.delta_c1) ? "ok" : "FAIL");
      } else {
        cur = apply(cur, moves[i]);
      }
      std::cout << line.str() << '\n';
    }
    std::cout << print_document(document_of(cur));
  } else {
    Shadow cur = shadow_of(doc);
    const int chi0 = euler_characteristic(cur.poly);
    for (std::size_t i = 0; i < moves.size(); ++i) {
      cur = apply(cur, moves[i]);
      std::cout << "# step " << i + 1 << ": " << format_move(moves[i]);
      if (check) std::cout << "  V " << cur.poly.vertex_count() << "  structure " << structural(cur.poly, cur.gleam, chi0);
      std::cout << '\n';
    }
    std::cout << print_document(document_of(cur));
  }
  return status;
}

int cmd_invariants(const std::string& path, const std::string& format) {
  ShadowDocument doc = load(path);
  if (!doc.orientation) {
    const auto all = enumerate_branchings(Polyhedron(doc.poly));
    if (all.empty()) throw ShadowError(ErrorCode::InvalidArgument, "no orientation given and none is a branching");
    doc.orientation = all.front().orientation;
    std::cout << "# using the first branching " << signs(*doc.orientation) << '\n';
  }
  const DecoratedShadow d = decorated_of(doc);
  const BranchedShadow& s = d.shadow;
  const ChernData c = chern_class(s);
  const IndexCochains ic = index_cochains(d);
  const auto pres = c.eul.pres;
  const bool kv = format == "kv";
  if (!kv) {
    std::cout << "region  eul  gl     c1     I+  I-\n";
  }
  for (int r = 0; r < s.poly.region_count(); ++r) {
    const int e = static_cast<int>(c.eul.rep[r].get_si());
    const int g2 = s.gleam.doubled[r];
    const std::string c1 = format_gleam(static_cast<int>(c.c1.rep[r].get_si()));
    const long ip = ic.plus.rep[r].get_si(), im = ic.minus.rep[r].get_si();
    if (kv) {
      std::cout << "eul.R" << r << " = " << e << "\ngl.R" << r << " = " << format_gleam(g2) << "\nc1.R" << r << " = "
                << c1 << "\nIplus.R" << r << " = " << ip << "\nIminus.R" << r << " = " << im << '\n';
    } else {
      std::ostringstream row;
      row << 'R' << r;
      std::string a = row.str();
      a.resize(8, ' ');
      std::string b = std::to_string(e);
      b.resize(5, ' ');
      std::string g = format_gleam(g2);
      g.resize(7, ' ');
      std::string cc = c1;
      cc.resize(7, ' ');
      std::string p = std::to_string(ip);
      p.resize(4, ' ');
      std::cout << a << b << g << cc << p << im << '\n';
    }
  }
  std::ostringstream tors;
  for (const mpz_class& t : pres->torsion()) tors << ' ' << t;
  if (kv) {
    std::cout << "h2.rank = " << h2_basis(s).size() << "\nh2cohom.free_rank = " << pres->free_rank()
              << "\nh2cohom.torsion = [" << (tors.str().empty() ? "" : tors.str().substr(1)) << "]\n";
    std::cout << "eul.class = " << key_string(c.eul) << "\nc1.class = " << key_string(c.c1)
              << "\nIplus.class = " << key_string(ic.plus) << "\nIminus.class = " << key_string(ic.minus) << '\n';
  } else {
    std::cout << "H_2 rank " << h2_basis(s).size() << ", H^2 free rank " << pres->free_rank() << ", torsion ["
              << (tors.str().empty() ? "" : tors.str().substr(1)) << "]\n";
    std::cout << "[Eul] " << key_string(c.eul) << "  [c1] " << key_string(c.c1) << "  [I+] " << key_string(ic.plus)
              << "  [I-] " << key_string(ic.minus) << '\n';
  }
  return kExitOk;
}

int cmd_tables(const std::string& which) {
  int status = kExitOk;
  const std::vector<std::string> names = which == "all" ? table_names() : std::vector<std::string>{which};
  for (const std::string& w : names) {
    const TableReport rep = table_report(w);
    std::cout << "## " << w << '\n' << rep.generated;
    std::cout << "## " << w << ": " << (rep.match ? "matches the reference" : "DIFFERS from the reference") << '\n';
    for (const std::string& d : rep.differences) std::cout << "##   " << d << '\n';
    if (!rep.match) status = kExitInvalid;
  }
  return status;
}

int cmd_fixtures(const std::string& name) {
  if (name.empty()) {
    std::cout << "# " << kCatalogVersion << '\n';
    for (const Fixture& f : catalog()) std::cout << f.name << "  " << f.description << '\n';
    return kExitOk;
  }
  const Fixture f = fixture(name);
  std::cout << "# " << f.name << ": " << f.description << '\n' << print_document(f.doc);
  return kExitOk;
}

int cmd_eliminate(const std::string& path, int budget) {
  const DecoratedShadow d = decorated_of(load(path));
  const Elimination el = eliminate_negative(d, budget);
  if (el.obstructed) {
    std::cout << "# obstructed: [I-] = " << key_string(el.residual) << " is not zero\n";
    return kExitOk;
  }
  std::cout << "# " << el.steps.size() << " rewrites\n" << print_rewrite_script(el.steps);
  return kExitOk;
}

int cmd_rewrite(const std::string& path, const std::string& script) {
  DecoratedShadow d = decorated_of(load(path));
  for (const CxRewrite& r : parse_rewrite_script(read_file(script))) d = apply_rewrite(d, r);
  std::cout << print_document(document_of(d));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branched shadows: moves, Chern classes and complex points"};
  app.require_subcommand(1);

  std::string path, script, mode = "exhaustive", which = "all", name, format = "table";
  std::uint64_t seed = 0;
  int budget = 50;
  bool check = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a shadow document");
  validate_cmd->add_option("path", path, "file, - or fixture:<name>")->required();

  auto* branch_cmd = app.add_subcommand("branch", "find branchings");
  branch_cmd->add_option("path", path)->required();
  branch_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "blowup"}));
  branch_cmd->add_option("--seed", seed);
  branch_cmd->add_option("--budget", budget);

  auto* apply_cmd = app.add_subcommand("apply", "replay a move script");
  apply_cmd->add_option("path", path)->required();
  apply_cmd->add_option("script", script)->required();
  apply_cmd->add_flag("--check-invariants", check);

  auto* inv_cmd = app.add_subcommand("invariants", "Euler, gleam, c1 and I+- report");
  inv_cmd->add_option("path", path)->required();
  inv_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "kv"}));

  auto* tables_cmd = app.add_subcommand("tables", "regenerate the reference tables");
  tables_cmd->add_option("--which", which)->check(CLI::IsMember({"all", "one_two", "lune", "mp23"}));

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list or print catalog fixtures");
  fixtures_cmd->add_option("name", name);

  auto* elim_cmd = app.add_subcommand("eliminate", "plan the removal of negative complex points");
  elim_cmd->add_option("path", path)->required();
  elim_cmd->add_option("--budget", budget);

  auto* rewrite_cmd = app.add_subcommand("rewrite", "replay a complex-point rewrite script");
  rewrite_cmd->add_option("path", path)->required();
  rewrite_cmd->add_option("script", script)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(path);
    if (*branch_cmd) return cmd_branch(path, mode, seed, budget);
    if (*apply_cmd) return cmd_apply(path, script, check);
    if (*inv_cmd) return cmd_invariants(path, format);
    if (*tables_cmd) return cmd_tables(which);
    if (*fixtures_cmd) return cmd_fixtures(name);
    if (*elim_cmd) return cmd_eliminate(path, budget);
    if (*rewrite_cmd) return cmd_rewrite(path, script);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
