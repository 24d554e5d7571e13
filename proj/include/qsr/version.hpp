#pragma once

namespace qsr {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace qsr
