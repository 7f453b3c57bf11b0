#include "hextile/dihedral.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hextile {

const std::array<GroupElement, 12>& all_elements() {
  static const std::array<GroupElement, 12> elems = [] {
    std::array<GroupElement, 12> a{};
    for (int i = 0; i < 12; ++i) a[i] = element_from_index(i);
    return a;
  }();
  return elems;
}

GroupElement element_from_index(int idx) {
  if (idx < 0 || idx >= 12) throw std::invalid_argument("element index out of range");
  return GroupElement{static_cast<std::uint8_t>(idx / 6),
                      static_cast<std::uint8_t>(idx % 6)};
}

std::string element_label(GroupElement x) {
  std::string s = x.flip ? "f" : "";
  if (x.rot == 0) return x.flip ? s : "e";
  s += "r";
  if (x.rot > 1) s += static_cast<char>('0' + x.rot);
  return s;
}

namespace {

bool is_closed(std::uint16_t mask) {
  if (!(mask & 1)) return false;  // identity
  for (int i = 0; i < 12; ++i) {
    if (!((mask >> i) & 1)) continue;
    for (int j = 0; j < 12; ++j) {
      if (!((mask >> j) & 1)) continue;
      int k = multiply(element_from_index(i), element_from_index(j)).index();
      if (!((mask >> k) & 1)) return false;
    }
  }
  return true;
}

std::uint16_t closure_mask(std::uint16_t seed) {
  std::uint16_t mask = seed | 1;
  for (;;) {
    std::uint16_t next = mask;
    for (int i = 0; i < 12; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (int j = 0; j < 12; ++j) {
        if (!((mask >> j) & 1)) continue;
        next |= std::uint16_t{1}
                << multiply(element_from_index(i), element_from_index(j)).index();
      }
    }
    if (next == mask) return mask;
    mask = next;
  }
}

// Label by the first generating set of size <= 2, elements scanned in index
// order, reflections printed first to match the usual <f,r^k> notation.
std::string canonical_label(std::uint16_t mask) {
  for (int i = 0; i < 12; ++i) {
    if (closure_mask(std::uint16_t{1} << i) == mask)
      return "<" + element_label(element_from_index(i)) + ">";
  }
  for (int i = 0; i < 12; ++i) {
    for (int j = i + 1; j < 12; ++j) {
      std::uint16_t seed = (std::uint16_t{1} << i) | (std::uint16_t{1} << j);
      if (closure_mask(seed) != mask) continue;
      GroupElement a = element_from_index(i), b = element_from_index(j);
      if (b.flip && !a.flip) std::swap(a, b);
      return "<" + element_label(a) + "," + element_label(b) + ">";
    }
  }
  throw std::logic_error("subgroup of D12 without a generating set of size <= 2");
}

constexpr int kNoMobius = INT_MIN;

}  // namespace

Subgroup::Subgroup(std::uint16_t mask) : mask_(mask) {
  if (!is_closed(mask)) throw std::invalid_argument("element set is not a subgroup");
}

Subgroup Subgroup::closure(const std::vector<GroupElement>& generators) {
  std::uint16_t seed = 1;
  for (GroupElement g : generators) seed |= std::uint16_t{1} << g.index();
  return Subgroup(closure_mask(seed));
}

int Subgroup::order() const { return std::popcount(mask_); }

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  for (int i = 0; i < 12; ++i)
    if ((mask_ >> i) & 1) out.push_back(element_from_index(i));
  return out;
}

Subgroup Subgroup::conjugate(GroupElement x) const {
  std::uint16_t mask = 0;
  for (int i = 0; i < 12; ++i) {
    if (!((mask_ >> i) & 1)) continue;
    GroupElement y = multiply(multiply(x, element_from_index(i)), inverse(x));
    mask |= std::uint16_t{1} << y.index();
  }
  return Subgroup(mask);
}

int SubgroupLattice::index_of_mask(std::uint16_t mask) const {
  for (int i = 0; i < kSize; ++i)
    if (subgroups_[i].mask() == mask) return i;
  return -1;
}

int SubgroupLattice::index_of(const Subgroup& s) const {
  int i = index_of_mask(s.mask());
  if (i < 0) throw std::invalid_argument("subgroup not in lattice");
  return i;
}

bool SubgroupLattice::leq(int g, int h) const {
  return subgroups_[h].contains(subgroups_[g]);
}

int SubgroupLattice::mobius(int g, int h) const {
  if (g < 0 || h < 0 || g >= kSize || h >= kSize || !leq(g, h))
    throw std::invalid_argument("mobius: pair is not comparable");
  return mobius_[g][h];
}

std::vector<std::vector<int>> SubgroupLattice::conjugacy_classes() const {
  std::vector<std::vector<int>> out(num_classes_);
  for (int i = 0; i < kSize; ++i) out[class_of_[i]].push_back(i);
  return out;
}

std::vector<std::array<int, 4>> SubgroupLattice::maximal_chains() const {
  // Cover relation: g < h with nothing strictly between.
  auto covers = [&](int g, int h) {
    if (g == h || !leq(g, h)) return false;
    for (int k = 0; k < kSize; ++k)
      if (k != g && k != h && leq(g, k) && leq(k, h)) return false;
    return true;
  };
  std::vector<std::array<int, 4>> chains;
  for (int a = 0; a < kSize; ++a) {
    if (!covers(bottom(), a)) continue;
    for (int b = 0; b < kSize; ++b) {
      if (!covers(a, b)) continue;
      if (covers(b, top())) chains.push_back({bottom(), a, b, top()});
    }
  }
  return chains;
}

SubgroupLattice enumerate_subgroups() {
  std::set<std::uint16_t> masks;
  masks.insert(closure_mask(1));
  for (int i = 0; i < 12; ++i)
    for (int j = i; j < 12; ++j)
      masks.insert(closure_mask((std::uint16_t{1} << i) | (std::uint16_t{1} << j)));

  if (masks.size() != SubgroupLattice::kSize) {
    std::ostringstream msg;
    msg << "subgroup enumeration produced " << masks.size() << " subgroups, expected 16";
    throw std::logic_error(msg.str());
  }

  SubgroupLattice lat;
  for (std::uint16_t m : masks) lat.subgroups_.emplace_back(m);
  std::sort(lat.subgroups_.begin(), lat.subgroups_.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.mask() < b.mask();
            });

  for (const Subgroup& s : lat.subgroups_) lat.labels_.push_back(canonical_label(s.mask()));

  // Mobius by recursion on interval size: mu(g,g) = 1,
  // mu(g,h) = -sum over g <= k < h of mu(g,k).  The canonical order is a
  // linear extension (containment implies smaller order), so a forward
  // sweep fills every interval before it is needed.
  for (auto& row : lat.mobius_) row.fill(kNoMobius);
  for (int g = 0; g < SubgroupLattice::kSize; ++g) {
    for (int h = 0; h < SubgroupLattice::kSize; ++h) {
      if (!lat.leq(g, h)) continue;
      if (g == h) {
        lat.mobius_[g][h] = 1;
        continue;
      }
      int acc = 0;
      for (int k = 0; k < SubgroupLattice::kSize; ++k)
        if (k != h && lat.leq(g, k) && lat.leq(k, h)) acc += lat.mobius_[g][k];
      lat.mobius_[g][h] = -acc;
    }
  }

  // Conjugacy classes, numbered by first appearance in canonical order.
  lat.class_of_.fill(-1);
  for (int i = 0; i < SubgroupLattice::kSize; ++i) {
    if (lat.class_of_[i] >= 0) continue;
    int id = lat.num_classes_++;
    for (GroupElement x : all_elements()) {
      int j = lat.index_of_mask(lat.subgroups_[i].conjugate(x).mask());
      if (j < 0) throw std::logic_error("conjugate subgroup missing from lattice");
      lat.class_of_[j] = id;
    }
  }

  for (int h = 0; h < SubgroupLattice::kSize; ++h) {
    Rational w = 0;
    for (int g = 0; g < SubgroupLattice::kSize; ++g)
      if (lat.leq(g, h)) w += Rational(lat.mobius_[g][h], lat.subgroups_[g].index());
    lat.weights_.push_back(w);
  }

  return lat;
}

}  // namespace hextile
