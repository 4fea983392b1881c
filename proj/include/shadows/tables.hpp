#pragma once

#include <string>
#include <vector>

#include "shadows/moves.hpp"

namespace shadows {

// Names accepted by the table functions: one_two, lune, mp23.
std::vector<std::string> table_names();

// Embedded reference copy.
std::string golden_table(const std::string& which);

// Recomputed from the move engine and the invariants.
std::string regenerate_table(const std::string& which);

struct TableReport {
  std::string which;
  std::string generated;
  std::string golden;
  bool match = false;
  std::vector<std::string> differences;  // "line N: got ... expected ..."
};
TableReport table_report(const std::string& which);

// One regenerated row of the 1->2 table.
struct OneTwoRowResult {
  std::string label;  // "?" when the case is missing from the reference
  std::string signs;
  char r7 = '+';
  std::string eul, gl, c1;  // e.g. "0", "-R6", "-2R4"
  int versions = 0;         // raw versions that produced this row
  bool consistent = true;   // all of them gave the same classes
};
std::vector<OneTwoRowResult> one_two_pipeline();

}  // namespace shadows
