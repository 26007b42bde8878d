#pragma once

namespace gpspec {
inline constexpr const char* kVersion = "0.1.0";
}
