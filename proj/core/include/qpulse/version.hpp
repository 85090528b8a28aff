#pragma once

namespace qpulse {

inline constexpr const char* version = "0.1.0";

} // namespace qpulse
