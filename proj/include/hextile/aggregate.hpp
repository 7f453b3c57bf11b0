#pragma once

// Combines the lattice weights with the per-class counts into the number of
// tilings distinct up to every rotation and reflection (OEIS A066931), by
// two independent routes, and inverts "at least these symmetries" counts
// into "exactly these symmetries" counts.

#include <stdexcept>

#include "hextile/counting.hpp"
#include "hextile/dihedral.hpp"
#include "hextile/numeric.hpp"
#include "hextile/oracle.hpp"

namespace hextile {

// (#c<e> + 3#c<f> + 3#c<fr> + #c<r3> + 2#c<r2> + 2#c<r>) / 12, the
// cancelled form of the weight sum; division is checked exact.
Integer distinct_count_simplified(int n);

// Sum over all 16 subgroups of weight(h) * #c(class of h)(n).  Zero-weight
// subgroups have no formula; their weight being exactly zero is re-verified
// here rather than assumed.
Integer distinct_count_mobius(const SubgroupLattice& lattice, int n);

struct MissingCountError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Number of tilings whose stabilizer is exactly the subgroup g:
// sum over h >= g of mobius(g, h) * #c(h)(n).  Formula classes are
// evaluated exactly; the four formula-less classes fall back to the census
// when one is supplied, and raise MissingCountError otherwise.
Integer exact_symmetry_count(const SubgroupLattice& lattice, int g, int n,
                             const Census* oracle_census = nullptr);

}  // namespace hextile
