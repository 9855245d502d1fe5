#pragma once

#include <string_view>

namespace imbandit {

inline constexpr std::string_view kToolName = "imbandit";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace imbandit
