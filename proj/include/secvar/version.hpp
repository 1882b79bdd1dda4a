#pragma once

namespace secvar {

inline constexpr const char* kToolName = "secvar";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace secvar
