#pragma once

// Exact per-symmetry-class tiling counts for the side-n hexagon, one
// factorial-product formula per class.  Each count is the number of tilings
// fixed by every element of a subgroup in the class:
//
//   Any               #c<e>    A008793  number of tilings (Stanley case 1)
//   VertexReflection  #c<f>    A049505  symmetric plane partitions (case 2)
//   EdgeReflection    #c<fr>   A181119  transpose-complementary (case 6),
//                                       inflated onto the hexagon index
//   HalfTurn          #c<r3>   A259049  self-complementary (case 5)
//   Rot120            #c<r2>   A006366  cyclically symmetric (case 3)
//   Rot60             #c<r>    A049503  cyclically symmetric and
//                                       self-complementary (case 9), inflated
//
// The three "inflated" sequences live on even n only and vanish for odd n.
// Every function takes the hexagon side n; n = 0 yields 1 for all classes.

#include <array>
#include <optional>
#include <string_view>

#include "hextile/dihedral.hpp"
#include "hextile/numeric.hpp"

namespace hextile {

enum class SymmetryClass {
  kAny,
  kVertexReflection,
  kEdgeReflection,
  kHalfTurn,
  kRot120,
  kRot60,
};

inline constexpr std::array<SymmetryClass, 6> kAllSymmetryClasses = {
    SymmetryClass::kAny,      SymmetryClass::kVertexReflection,
    SymmetryClass::kEdgeReflection, SymmetryClass::kHalfTurn,
    SymmetryClass::kRot120,   SymmetryClass::kRot60,
};

int stanley_case(SymmetryClass c);
std::string_view oeis_id(SymmetryClass c);
std::string_view class_name(SymmetryClass c);  // CLI spelling, e.g. "half-turn"
std::optional<SymmetryClass> class_from_name(std::string_view name);

// k! from a shared memo table; safe to call concurrently.
Integer factorial(unsigned k);

Integer count_any(int n);
Integer count_symmetric(int n);
Integer count_transpose_complementary(int n);
Integer count_self_complementary(int n);
Integer count_cyclically_symmetric(int n);
Integer count_cyclic_self_complementary(int n);

Integer count_for_class(SymmetryClass c, int n);

// Class of the cyclic subgroup <x>.  Total: every element of D12 lands in
// one of the six classes.
SymmetryClass class_of_element(GroupElement x);

// Classes cover exactly the six nonzero-weight subgroup shapes; the other
// ten subgroups have no product formula and yield nullopt.
std::optional<SymmetryClass> class_of_subgroup(const Subgroup& h);

}  // namespace hextile
