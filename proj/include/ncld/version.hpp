#pragma once

namespace ncld {
inline constexpr const char* kVersion = "0.1.0";
}
