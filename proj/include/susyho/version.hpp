#pragma once

namespace susyho {
inline constexpr const char* version = "1.0.0";
}
