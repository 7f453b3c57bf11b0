#pragma once

#include <cstdint>
#include <string>

#include "hextile/oracle.hpp"

namespace hextile {

// SVG drawing of the index-th tiling in enumeration order, lozenges as
// outlined parallelograms.  Throws std::out_of_range when index is not
// below the total number of tilings.
std::string render_tiling_svg(int n, std::uint64_t index, const OracleOptions& opts = {});

}  // namespace hextile
