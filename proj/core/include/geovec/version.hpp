#ifndef GEOVEC_VERSION_HPP
#define GEOVEC_VERSION_HPP

namespace geovec {

inline constexpr const char* kToolName = "geovec";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace geovec

#endif
