#include "hextile/aggregate.hpp"

namespace hextile {

namespace {

Integer exact_twelfth(const Integer& sum) {
  Integer q, r;
  boost::multiprecision::divide_qr(sum, Integer(12), q, r);
  if (r != 0) throw std::logic_error("distinct-count numerator is not divisible by 12");
  return q;
}

}  // namespace

Integer distinct_count_simplified(int n) {
  Integer sum = count_any(n);
  sum += 3 * count_symmetric(n);
  sum += 3 * count_transpose_complementary(n);
  sum += count_self_complementary(n);
  sum += 2 * count_cyclically_symmetric(n);
  sum += 2 * count_cyclic_self_complementary(n);
  return exact_twelfth(sum);
}

Integer distinct_count_mobius(const SubgroupLattice& lattice, int n) {
  Rational total = 0;
  for (int h = 0; h < lattice.size(); ++h) {
    const Rational& w = lattice.weight(h);
    auto cls = class_of_subgroup(lattice.subgroup(h));
    if (!cls) {
      // The whole scheme rests on these weights cancelling; verify, don't trust.
      if (w != 0)
        throw std::logic_error("subgroup " + lattice.label(h) +
                               " has nonzero weight but no counting formula");
      continue;
    }
    total += w * Rational(count_for_class(*cls, n));
  }
  if (boost::multiprecision::denominator(total) != 1)
    throw std::logic_error("weighted count sum is not an integer");
  return boost::multiprecision::numerator(total);
}

Integer exact_symmetry_count(const SubgroupLattice& lattice, int g, int n,
                             const Census* oracle_census) {
  if (oracle_census && oracle_census->n != n)
    throw std::invalid_argument("census is for a different hexagon side");
  Integer sum = 0;
  for (int h = 0; h < lattice.size(); ++h) {
    if (!lattice.leq(g, h)) continue;
    int mu = lattice.mobius(g, h);
    if (mu == 0) continue;
    Integer fixed;
    if (auto cls = class_of_subgroup(lattice.subgroup(h))) {
      fixed = count_for_class(*cls, n);
    } else if (oracle_census) {
      fixed = oracle_census->at_least_count(lattice, h);
    } else {
      throw MissingCountError("no formula for subgroup " + lattice.label(h) +
                              " and no oracle census supplied");
    }
    sum += mu * fixed;
  }
  if (sum < 0)
    throw std::logic_error("exact symmetry count came out negative");
  return sum;
}

}  // namespace hextile
