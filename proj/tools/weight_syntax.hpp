#pragma once

#include "affcone/root_data.hpp"

#include <string>
#include <string_view>

namespace affcone::cli {

/// Parses "a0*L0 + a1*L1 + ... + b*delta" (also "d" for delta). Coefficients
/// are integers or fractions p/q; a bare symbol has coefficient 1; repeated
/// symbols add up; "0" is the zero weight. Throws std::invalid_argument.
AffineWeight parse_weight(const AffineRootData& data, std::string_view text);

/// Canonical text in the same grammar, e.g. "2*L0 + L1 - 1/2*delta".
std::string format_weight(const AffineRootData& data, const AffineWeight& w);

}  // namespace affcone::cli
