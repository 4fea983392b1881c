#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shadows/io.hpp"

namespace shadows {

inline constexpr const char* kCatalogVersion = "shadows-catalog 1";

struct Fixture {
  std::string name;
  std::string description;
  ShadowDocument doc;
};

// Built-in names, then any `<name>.shadow` files found in the directory named
// by the SHADOWS_CATALOG environment variable (which override built-ins of
// the same name).
std::vector<std::string> fixture_names();

// A catalog entry, or `orbit:<base>:<seed>:<steps>` for a random walk of
// branched forward moves from a branched fixture.
Fixture fixture(const std::string& name);

std::vector<Fixture> catalog();

// Standard polyhedra with n vertices, one per isomorphism class, in a fixed
// order.
std::vector<Polyhedron> enumerate_polyhedra(int vertices);

// Random branched forward moves (all kinds, all versions) from s.
BranchedShadow random_orbit(const BranchedShadow& s, std::uint64_t seed, int steps,
                            std::vector<MoveInstance>* log = nullptr);

}  // namespace shadows
