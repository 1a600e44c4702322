#pragma once

namespace kneser {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kArtifactName = "kneser";

}  // namespace kneser
