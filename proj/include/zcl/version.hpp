#pragma once

namespace zcl {

inline constexpr const char* tool_version = "0.1.0";

}  // namespace zcl
