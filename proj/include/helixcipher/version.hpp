#pragma once

namespace helixcipher {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace helixcipher
