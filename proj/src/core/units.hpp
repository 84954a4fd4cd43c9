#ifndef NVQC_CORE_UNITS_HPP
#define NVQC_CORE_UNITS_HPP

// Internal units: angular frequency in rad/us, time in us, field in Gauss.
// Files and CLI always carry linear MHz; convert at the boundary.

namespace nvqc {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

constexpr double mhz_to_rad_us(double f_mhz) { return kTwoPi * f_mhz; }
constexpr double rad_us_to_mhz(double w) { return w / kTwoPi; }

}  // namespace nvqc

#endif
