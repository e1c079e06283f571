#pragma once

namespace pihall {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kCatalogueVersion = 1;

}  // namespace pihall
