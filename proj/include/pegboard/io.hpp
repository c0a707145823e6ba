#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pegboard/loopcalc.hpp"
#include "pegboard/multicurve.hpp"

namespace pegboard {

inline constexpr std::string_view kCurvesHeader = "pegboard-curves v1";
inline constexpr std::string_view kTypedHeader = "pegboard-typed v1";

// Parse errors carry the 1-based line number in the message ("line 4: ...").
Multicurve parse_curves(std::string_view text);
std::string print_curves(const Multicurve& mc);
// One record without the trailing newline, e.g. "pegs 1 (1,0,L)(1,0,R) spinc=s1".
std::string curve_record(const Component& c, const std::string& label = "");

// Loads iff validate_typed passes; violations are anchored to the line of
// the offending arrow or generator.
TypeDGraph parse_typed(std::string_view text);
std::string print_typed(const TypeDGraph& g);

std::string read_file(const std::filesystem::path& p);
// Writes to a temporary next to the target, then renames it into place.
void write_file_atomic(const std::filesystem::path& p, std::string_view content);

}  // namespace pegboard
