#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mfdim/mass_function.hpp"

namespace mfdim {

// Mass-function documents:
//
//   { "frame": ["a", "b", "c"],
//     "assignments": [ { "subset": ["a"], "mass": 0.2 },
//                      { "subset": ["b", "c"], "mass": 0.8 } ] }
//
// Subset labels must name frame labels exactly. Structural problems raise
// ParseError, unknown labels UnknownLabel; the axioms are then checked by
// validate_mass_function.

MassFunction parse_mass_function_json(std::string_view text, double sum_tolerance = kDefaultSumTolerance);
MassFunction read_mass_function_file(const std::filesystem::path& path, double sum_tolerance = kDefaultSumTolerance);

/// Canonical document: assignments in canonical order, masses in shortest
/// round-trip form, two-space indentation, trailing newline.
std::string to_json(const MassFunction& m);

}  // namespace mfdim
