#pragma once

namespace ufact {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "ufact";

}  // namespace ufact
