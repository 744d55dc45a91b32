#pragma once

#include <optional>
#include <string_view>

#include "k3dual/hompoly.hpp"

namespace k3dual {

// Reads sums of terms like `3/4*s^2*t^2`, with parentheses and integer powers.
// Errors report a 1-based column. Without an expected degree the degree is inferred.
HomPoly parse_hompoly(std::string_view text, const VarPair& vars,
                      std::optional<int> degree = std::nullopt);
Rational parse_rational(std::string_view text);

}  // namespace k3dual
