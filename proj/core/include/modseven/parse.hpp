#pragma once

#include <string_view>

#include "modseven/poly.hpp"

namespace modseven {

/// Parse the textual polynomial grammar: identifiers from the context,
/// integer and num/den rational literals, + - * ^ ( ), with ^ binding
/// tightest. Whitespace-insensitive (offsets in errors are 1-based).
/// Coefficients come out as Rat.
/// With reduce == true the result is put in sigma2-normal form (the context
/// must contain z1, z2, z3).
MultiPoly parse_expr(std::string_view text, const ContextPtr& ctx, bool reduce = false);

}  // namespace modseven
