#pragma once

namespace ccc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ccc
