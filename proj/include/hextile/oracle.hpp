#pragma once

// Brute-force ground truth: enumerate every lozenge tiling of the side-n
// hexagon, apply the D12 action, and count fixed tilings, stabilizers and
// orbits.
//
// Cell coordinates.  The triangular lattice is cut by three families of
// lines; a unit triangle sits between consecutive lines of each family,
// giving integer lane indexes (u, v, w) with u + v + w = -1 (up-pointing)
// or -2 (down-pointing).  Only u and v are stored; w is derived.  The
// side-n hexagon, centred on the origin with two vertices on the u-lane
// axis, is exactly the set of triangles with u, v, w all in [-n, n-1].
//
// In these coordinates the whole of D12 acts by signed lane permutations:
//   r  (rotation by 60):             (u,v,w) -> (-w-1, -u-1, -v-1)
//   f  (reflection, vertex axis):    (u,v,w) -> (-u-1, -w-1, -v-1)
// Composites are again "permute lanes, then optionally send x to -x-1",
// which keeps the hexagon closed under the action for every n.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hextile/dihedral.hpp"
#include "hextile/numeric.hpp"

namespace hextile {

enum class Orient : std::uint8_t { kUp, kDown };

struct TriCell {
  int u = 0;
  int v = 0;
  Orient orient = Orient::kUp;

  int w() const { return (orient == Orient::kUp ? -1 : -2) - u - v; }
  friend auto operator<=>(const TriCell&, const TriCell&) = default;
};

// An edge-adjacent up/down pair, stored with a < b.
struct Lozenge {
  TriCell a, b;

  Lozenge(TriCell x, TriCell y);  // throws std::invalid_argument if not adjacent
  friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

struct Tiling {
  std::vector<Lozenge> lozenges;  // sorted
};

bool in_hexagon(int n, const TriCell& c);
std::vector<TriCell> hexagon_cells(int n);  // sorted by (u, v, orient)

// The up/down neighbours of a cell, unrestricted by any hexagon.
std::array<TriCell, 3> cell_neighbors(const TriCell& c);

TriCell transform_cell(GroupElement x, const TriCell& c);
Tiling apply_element(GroupElement x, const Tiling& t);
bool is_valid_tiling(int n, const Tiling& t);

// Combinatorial-explosion guard.  Enumeration refuses n above the bound;
// the default comes from HEXTILE_ORACLE_BOUND (fallback 4, already 232848
// tilings; n = 5 is about 2.7e8).
int default_safety_bound();

struct EnumerationBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int max_n = default_safety_bound();
  int jobs = 1;                       // census only; merge is bit-identical
  bool keep_canonical_forms = false;  // retain the per-tiling canonical multiset
};

// Visits each tiling exactly once, in a fixed order: the backtracking
// always covers the smallest uncovered cell, pairing it with its feasible
// neighbours in ascending order.  Return false from the visitor to stop.
void enumerate_tilings(int n, const std::function<bool(const Tiling&)>& visit,
                       const OracleOptions& opts = {});

Integer count_tilings(int n, const OracleOptions& opts = {});

// Number of tilings with apply_element(x, t) == t.
Integer fixed_count(int n, GroupElement x, const OracleOptions& opts = {});

struct Census {
  int n = 0;
  std::uint64_t total = 0;
  std::array<std::uint64_t, 12> fixed_by_element{};  // by GroupElement::index()
  std::array<std::uint64_t, 16> exact_stabilizer{};  // by lattice subgroup index
  std::uint64_t orbit_count = 0;
  // Sorted multiset, one entry per tiling, present when requested via
  // OracleOptions::keep_canonical_forms.
  std::vector<std::string> canonical_forms;

  // #c(g): tilings fixed by all of subgroup g, i.e. the stabilizer sum over
  // all h >= g.
  Integer at_least_count(const SubgroupLattice& lattice, int subgroup) const;
};

// One pass over all tilings: per-element fixed counts, exact-stabilizer
// counts, and the orbit count via canonical forms (the lexicographic least
// of the 12 images of the sorted lozenge list).
Census census(const SubgroupLattice& lattice, int n, const OracleOptions& opts = {});

// {"n":., "total":., "fixed_by_element":{...}, "exact_stabilizer":{...},
//  "orbit_count":.} with element and subgroup labels as keys.
std::string census_to_json(const Census& c, const SubgroupLattice& lattice);

}  // namespace hextile
