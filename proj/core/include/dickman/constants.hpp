#pragma once

namespace dickman {

// Euler-Mascheroni constant, fixed to double precision.
inline constexpr double euler_gamma = 0.57721566490153286;

inline constexpr double pi = 3.14159265358979323846;

inline constexpr const char* version_string = "0.1.0";

} // namespace dickman
