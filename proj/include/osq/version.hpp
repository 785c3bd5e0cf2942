#pragma once

namespace osq {

inline constexpr const char* kToolName = "osq";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace osq
