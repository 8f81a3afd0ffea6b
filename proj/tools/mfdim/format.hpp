#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mfdim::cli {

/// Shortest decimal that reads back to the same double. Locale independent.
std::string format_double(double x);

/// Four decimals, ties rounded away from zero.
std::string format_fixed4(double x);

std::string csv_line(const std::vector<std::string>& cells);

}  // namespace mfdim::cli
