#pragma once

namespace a2ck {
inline constexpr const char* kVersion = "0.1.0";
}
