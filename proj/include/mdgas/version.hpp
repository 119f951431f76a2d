#pragma once

namespace mdgas {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace mdgas
