#pragma once

namespace qdesk {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qdesk
