#pragma once

namespace qwork {

inline constexpr const char* version = "0.1.0";

}  // namespace qwork
