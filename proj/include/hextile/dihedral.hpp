#pragma once

// The symmetry group of the regular hexagon: the dihedral group of order 12
// with presentation <f, r | f^2 = r^6 = (fr)^2 = e>, where r is the rotation
// by 60 degrees and f is the reflection whose axis passes through two
// opposite vertices.  Elements are kept in the normal form f^a r^b, so
// equality is a field comparison and the product follows from r f = f r^-1.
//
// SubgroupLattice holds the 16 subgroups with containment, the Mobius
// function of the lattice, the 10 conjugacy classes, and the exact rational
// weight each subgroup contributes to the count of tilings distinct up to
// symmetry.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hextile/numeric.hpp"

namespace hextile {

struct GroupElement {
  std::uint8_t flip = 0;  // exponent of f, in {0, 1}
  std::uint8_t rot = 0;   // exponent of r, in {0, ..., 5}

  constexpr int index() const { return flip * 6 + rot; }
  friend constexpr bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline constexpr GroupElement kIdentity{0, 0};

constexpr GroupElement multiply(GroupElement x, GroupElement y) {
  // f^a1 r^b1 * f^a2 r^b2 = f^(a1+a2) r^(b2 +/- b1), sign by whether b1
  // had to move past an f.
  std::uint8_t flip = (x.flip + y.flip) % 2;
  int b1 = y.flip ? (6 - x.rot) % 6 : x.rot;
  return GroupElement{flip, static_cast<std::uint8_t>((b1 + y.rot) % 6)};
}

constexpr GroupElement inverse(GroupElement x) {
  if (x.flip) return x;  // reflections are involutions
  return GroupElement{0, static_cast<std::uint8_t>((6 - x.rot) % 6)};
}

const std::array<GroupElement, 12>& all_elements();
GroupElement element_from_index(int idx);

// "e", "r", "r2", ..., "r5", "f", "fr", "fr2", ..., "fr5"
std::string element_label(GroupElement x);

// A subgroup of D12 as a 12-bit membership mask over element indexes.
class Subgroup {
 public:
  // Validates closure; throws std::invalid_argument otherwise.
  explicit Subgroup(std::uint16_t mask);

  static Subgroup closure(const std::vector<GroupElement>& generators);

  int order() const;
  int index() const { return 12 / order(); }
  std::uint16_t mask() const { return mask_; }
  bool contains(GroupElement x) const { return (mask_ >> x.index()) & 1; }
  bool contains(const Subgroup& other) const {
    return (mask_ & other.mask_) == other.mask_;
  }
  std::vector<GroupElement> elements() const;
  Subgroup conjugate(GroupElement x) const;  // x H x^-1

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  std::uint16_t mask_;
};

class SubgroupLattice {
 public:
  static constexpr int kSize = 16;

  int size() const { return kSize; }
  const Subgroup& subgroup(int i) const { return subgroups_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of_mask(std::uint16_t mask) const;       // -1 if absent
  int index_of(const Subgroup& s) const;             // throws if absent

  int bottom() const { return 0; }
  int top() const { return kSize - 1; }
  bool leq(int g, int h) const;                      // containment g <= h

  // Mobius function of the containment order; requires g <= h.
  int mobius(int g, int h) const;

  int conjugacy_class(int i) const { return class_of_[i]; }
  int num_conjugacy_classes() const { return num_classes_; }
  std::vector<std::vector<int>> conjugacy_classes() const;

  // w(h) = sum over g <= h of mobius(g, h) / [D12 : g]; the coefficient of
  // the "fixed by at least h" count in the distinct-tiling total.
  const Rational& weight(int i) const { return weights_[i]; }

  // All bottom-to-top chains following cover relations, as index 4-tuples.
  std::vector<std::array<int, 4>> maximal_chains() const;

 private:
  friend SubgroupLattice enumerate_subgroups();
  SubgroupLattice() = default;

  std::vector<Subgroup> subgroups_;
  std::vector<std::string> labels_;
  std::array<std::array<int, kSize>, kSize> mobius_{};
  std::array<int, kSize> class_of_{};
  int num_classes_ = 0;
  std::vector<Rational> weights_;
};

// Builds the lattice from closures of all generating sets of size <= 2
// (sufficient for D12) and fails loudly if the count is not 16.
SubgroupLattice enumerate_subgroups();

}  // namespace hextile
