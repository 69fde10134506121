#pragma once

namespace pnr {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pnr
