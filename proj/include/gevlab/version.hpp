#pragma once

#include <string_view>

namespace gevlab {

inline constexpr std::string_view kVersion = "gevlab 0.1.0";

}  // namespace gevlab
