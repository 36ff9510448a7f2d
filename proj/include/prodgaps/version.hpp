#pragma once

namespace prodgaps {

inline constexpr const char* kVersion = "prodgaps 0.1.0";

}  // namespace prodgaps
