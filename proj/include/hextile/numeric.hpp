#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hextile {

// All counts are exact; they outgrow machine words around n = 6.
using Integer = boost::multiprecision::cpp_int;

// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace hextile
