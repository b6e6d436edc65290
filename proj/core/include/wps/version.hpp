#pragma once

namespace wps {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wps
