#pragma once

namespace squeezeforce {

// 2018 CODATA exact values (SI).
inline constexpr double planck_reduced = 1.054571817e-34; // J s
inline constexpr double boltzmann = 1.380649e-23;         // J / K

// Cs D2 driving wavelength used throughout the reference figures.
inline constexpr double default_wavelength = 852e-9; // m

inline constexpr double pi = 3.14159265358979323846;

} // namespace squeezeforce
