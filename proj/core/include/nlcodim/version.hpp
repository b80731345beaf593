#pragma once

namespace nlcodim {

inline constexpr const char* version = "0.1.0";

} // namespace nlcodim
