#pragma once

namespace spp {

inline constexpr double speed_of_light = 2.99792458e8;  // m/s
inline constexpr double pi = 3.14159265358979323846;

}  // namespace spp
