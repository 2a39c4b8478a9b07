#pragma once

#include <cmath>
#include <numbers>

namespace iosim {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kFreeSpaceImpedance = 377.0; // ohm
inline constexpr double kPi = std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

inline double wavelength(double freq_hz) { return kSpeedOfLight / freq_hz; }
inline double wavenumber(double freq_hz) { return 2.0 * kPi / wavelength(freq_hz); }
inline double angular_frequency(double freq_hz) { return 2.0 * kPi * freq_hz; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

} // namespace iosim
