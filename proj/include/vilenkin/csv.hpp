#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vilenkin::csv {

/// Fixed 15-significant-digit rendering used by every CSV writer.
std::string real(double v);

/// Splits one CSV line on commas; no quoting.
std::vector<std::string> split(std::string_view line);

}  // namespace vilenkin::csv
