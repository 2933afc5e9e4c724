#pragma once

namespace trialsig {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace trialsig
