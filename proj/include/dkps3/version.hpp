#pragma once

namespace dkps3 {
inline constexpr const char* kVersion = "0.1.0";
}
