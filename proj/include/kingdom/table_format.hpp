#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kingdom/transfer.hpp"

namespace kingdom {

/// Parses `a..b` (or a single integer). Throws ParseError.
Range parse_range(std::string_view text);

/// Right-aligned columns, header row `n\m  <m values>`. When `marks` is given it
/// has the table's shape, and cells marked false get a trailing '!'.
std::string render_text(const ValueTable& table,
                        const std::vector<std::vector<bool>>* marks = nullptr);

/// First row `n\m,<m values>`, then `n,<values>` per row; plain decimal values.
std::string render_csv(const ValueTable& table);

/// Inverse of render_csv. Throws ParseError.
ValueTable parse_csv(std::string_view text);

}  // namespace kingdom
