#pragma once

namespace skewinv {

inline constexpr const char* kLibraryVersion = "1.0.0";

}  // namespace skewinv
