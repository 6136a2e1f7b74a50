#pragma once

namespace xdiscord {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace xdiscord
