#ifndef PLAB_VERSION_HPP
#define PLAB_VERSION_HPP

namespace plab {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr int kCsvSchemaVersion = 1;

}  // namespace plab

#endif  // PLAB_VERSION_HPP
