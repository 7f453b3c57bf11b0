#include "hextile/counting.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace hextile {

namespace {

void require_nonnegative(int n) {
  if (n < 0) throw std::invalid_argument("hexagon side must be nonnegative");
}

// Numerator and denominator are accumulated separately and divided once;
// a nonzero remainder means a transcribed formula is wrong, so it is a
// hard failure, not an assert that vanishes in release builds.
Integer exact_quotient(const Integer& num, const Integer& den) {
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("count formula did not divide exactly");
  return q;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return exact_quotient(factorial(n), factorial(k) * factorial(n - k));
}

}  // namespace

Integer factorial(unsigned k) {
  static std::mutex mu;
  static std::deque<Integer> table{Integer(1)};  // deque: growth keeps refs valid
  std::scoped_lock lock(mu);
  while (table.size() <= k) table.push_back(table.back() * Integer(table.size()));
  return table[k];
}

// prod_{i=0}^{n-1} i!(i+2n)! / (i+n)!^2
Integer count_any(int n) {
  require_nonnegative(n);
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= factorial(i) * factorial(i + 2 * n);
    Integer t = factorial(i + n);
    den *= t * t;
  }
  return exact_quotient(num, den);
}

// prod_{i=0}^{n-1} (2i)!(i+2n)! / ((2i+n)!(i+n)!)
Integer count_symmetric(int n) {
  require_nonnegative(n);
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= factorial(2 * i) * factorial(i + 2 * n);
    den *= factorial(2 * i + n) * factorial(i + n);
  }
  return exact_quotient(num, den);
}

// Nonzero only for even n = 2m: the axis bisects 2n cells which must pair
// up across it, and the pairing starts at the centre.
// C(3m-1, m) * prod_{i=0}^{2m-3} (i+4m)!(2i+2)! / ((2i+2m+2)!(i+2m)!),
// the i-range being empty for m = 1.
Integer count_transpose_complementary(int n) {
  require_nonnegative(n);
  if (n % 2 != 0) return 0;
  if (n == 0) return 1;
  int m = n / 2;
  Integer num = binomial(3 * m - 1, m), den = 1;
  for (int i = 0; i <= 2 * m - 3; ++i) {
    num *= factorial(i + 4 * m) * factorial(2 * i + 2);
    den *= factorial(2 * i + 2 * m + 2) * factorial(i + 2 * m);
  }
  return exact_quotient(num, den);
}

// Nonzero only for even n: a half-hexagon has a surplus of n cells in one
// orientation, forcing n cells to pair across the diameter, impossible in
// pairs when n is odd.  For n = 2m the count is count_any(m)^2.
Integer count_self_complementary(int n) {
  require_nonnegative(n);
  if (n % 2 != 0) return 0;
  Integer half = count_any(n / 2);
  return half * half;
}

// prod_{i=0}^{n-1} (3i+2)(3i)!(i+2n)! / ((2i+n)!(2i+n+1)!)
Integer count_cyclically_symmetric(int n) {
  require_nonnegative(n);
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= Integer(3 * i + 2) * factorial(3 * i) * factorial(i + 2 * n);
    den *= factorial(2 * i + n) * factorial(2 * i + n + 1);
  }
  return exact_quotient(num, den);
}

// Vanishes for odd n since <r3> <= <r>.  For n = 2m:
// prod_{i=0}^{m-1} (3i+1)!^2 / (i+m)!^2
Integer count_cyclic_self_complementary(int n) {
  require_nonnegative(n);
  if (n % 2 != 0) return 0;
  int m = n / 2;
  Integer num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    Integer a = factorial(3 * i + 1), b = factorial(i + m);
    num *= a * a;
    den *= b * b;
  }
  return exact_quotient(num, den);
}

Integer count_for_class(SymmetryClass c, int n) {
  switch (c) {
    case SymmetryClass::kAny: return count_any(n);
    case SymmetryClass::kVertexReflection: return count_symmetric(n);
    case SymmetryClass::kEdgeReflection: return count_transpose_complementary(n);
    case SymmetryClass::kHalfTurn: return count_self_complementary(n);
    case SymmetryClass::kRot120: return count_cyclically_symmetric(n);
    case SymmetryClass::kRot60: return count_cyclic_self_complementary(n);
  }
  throw std::invalid_argument("no counting formula for the requested class");
}

int stanley_case(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::kAny: return 1;
    case SymmetryClass::kVertexReflection: return 2;
    case SymmetryClass::kEdgeReflection: return 6;
    case SymmetryClass::kHalfTurn: return 5;
    case SymmetryClass::kRot120: return 3;
    case SymmetryClass::kRot60: return 9;
  }
  throw std::invalid_argument("unknown symmetry class");
}

std::string_view oeis_id(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::kAny: return "A008793";
    case SymmetryClass::kVertexReflection: return "A049505";
    case SymmetryClass::kEdgeReflection: return "A181119";
    case SymmetryClass::kHalfTurn: return "A259049";
    case SymmetryClass::kRot120: return "A006366";
    case SymmetryClass::kRot60: return "A049503";
  }
  throw std::invalid_argument("unknown symmetry class");
}

std::string_view class_name(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::kAny: return "any";
    case SymmetryClass::kVertexReflection: return "vertex-reflection";
    case SymmetryClass::kEdgeReflection: return "edge-reflection";
    case SymmetryClass::kHalfTurn: return "half-turn";
    case SymmetryClass::kRot120: return "rot120";
    case SymmetryClass::kRot60: return "rot60";
  }
  throw std::invalid_argument("unknown symmetry class");
}

std::optional<SymmetryClass> class_from_name(std::string_view name) {
  for (SymmetryClass c : kAllSymmetryClasses)
    if (name == class_name(c)) return c;
  return std::nullopt;
}

SymmetryClass class_of_element(GroupElement x) {
  if (x.flip) {
    return x.rot % 2 == 0 ? SymmetryClass::kVertexReflection
                          : SymmetryClass::kEdgeReflection;
  }
  switch (x.rot) {
    case 0: return SymmetryClass::kAny;
    case 1: case 5: return SymmetryClass::kRot60;
    case 2: case 4: return SymmetryClass::kRot120;
    default: return SymmetryClass::kHalfTurn;  // rot == 3
  }
}

std::optional<SymmetryClass> class_of_subgroup(const Subgroup& h) {
  // The six formula classes are exactly the cyclic subgroups <x>; match by
  // regenerating <x> from each element.
  for (GroupElement x : h.elements())
    if (Subgroup::closure({x}) == h) return class_of_element(x);
  return std::nullopt;
}

}  // namespace hextile
