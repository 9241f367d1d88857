#pragma once

namespace ebcap {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ebcap
