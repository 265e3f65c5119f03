#pragma once

namespace uigram {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace uigram
