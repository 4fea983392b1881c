#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadows/cxpoints.hpp"
#include "shadows/decor.hpp"
#include "shadows/moves.hpp"
#include "shadows/polyhedron.hpp"

namespace shadows {

// Text document:
//   vertices: N
//   edge <id>: (v,slot) (v,slot)
//   wings <id>: a b c | d e f      wings at end 0, then at end 1
//   gleam <region>: n | n/2
//   orient <region>: + | -
//   point <region> <+|-> <index>
// `#` starts a comment; blank lines are ignored. Only the polyhedron
// sections are mandatory.
struct ShadowDocument {
  PolyhedronData poly;
  std::optional<std::vector<int>> gleam2;       // doubled, per region
  std::optional<std::vector<int>> orientation;  // per region
  std::vector<std::pair<int, ComplexPoint>> points;
  bool operator==(const ShadowDocument&) const = default;
};

// ParseError messages carry the 1-based line number.
ShadowDocument parse_document(const std::string& text);
std::string print_document(const ShadowDocument& doc);

std::string format_gleam(int doubled);
int parse_gleam(const std::string& text);

ShadowDocument document_of(const Polyhedron& p);
ShadowDocument document_of(const Shadow& s);
ShadowDocument document_of(const BranchedShadow& s);
ShadowDocument document_of(const DecoratedShadow& d);

// Missing gleams default to the minimal gleam; orientation and points must
// be present for the richer kinds.
Shadow shadow_of(const ShadowDocument& doc);
BranchedShadow branched_of(const ShadowDocument& doc);
DecoratedShadow decorated_of(const ShadowDocument& doc);

// One move per line; `#` comments and blank lines skipped.
std::vector<MoveInstance> parse_script(const std::string& text);
std::string print_script(const std::vector<MoveInstance>& moves);

std::vector<CxRewrite> parse_rewrite_script(const std::string& text);
std::string print_rewrite_script(const std::vector<CxRewrite>& steps);

std::string read_file(const std::string& path);

}  // namespace shadows
