#pragma once

namespace regseq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace regseq
