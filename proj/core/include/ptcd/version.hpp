#ifndef PTCD_VERSION_HPP
#define PTCD_VERSION_HPP

namespace ptcd {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ptcd

#endif
