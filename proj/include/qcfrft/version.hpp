#pragma once

namespace qcfrft {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qcfrft
