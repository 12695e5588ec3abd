#pragma once

namespace midx {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace midx
