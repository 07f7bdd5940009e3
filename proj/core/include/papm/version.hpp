#pragma once

namespace papm {

inline constexpr const char* kVersion = "0.1.0";

} // namespace papm
