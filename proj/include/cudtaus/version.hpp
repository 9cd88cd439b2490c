#pragma once

namespace cudtaus {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cudtaus
