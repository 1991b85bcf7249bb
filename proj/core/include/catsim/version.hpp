#ifndef CATSIM_VERSION_HPP
#define CATSIM_VERSION_HPP

namespace catsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace catsim

#endif
