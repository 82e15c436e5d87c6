#pragma once

namespace tagnoise {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tagnoise
