#pragma once

namespace spincorr {
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kOutputFormatVersion = 1;
}  // namespace spincorr
