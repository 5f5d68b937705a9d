#ifndef LCMLAT_VERSION_HPP
#define LCMLAT_VERSION_HPP

namespace lcmlat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lcmlat

#endif
