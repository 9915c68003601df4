#pragma once

namespace stabscope {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace stabscope
