#pragma once

namespace formelast {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace formelast
