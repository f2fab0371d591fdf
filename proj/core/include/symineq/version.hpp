#pragma once

#include <string_view>

namespace symineq {

inline constexpr std::string_view kArtifactVersion = "1.0.0";

}  // namespace symineq
