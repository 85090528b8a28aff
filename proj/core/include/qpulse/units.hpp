#pragma once

#include <cmath>

// Unit conventions used throughout the library: every frequency is angular
// (rad/s) and every time is in seconds. Conversion to human-facing fs/ps/ns
// and GHz/THz happens only in the I/O layer.
namespace qpulse::units {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double ln2 = 0.69314718055994530942;

inline constexpr double femtosecond = 1e-15;
inline constexpr double picosecond = 1e-12;
inline constexpr double nanosecond = 1e-9;

// Gaussian field width T for a transform-limited pulse whose temporal
// *intensity* FWHM is tau0: |Omega(t)| = peak * exp(-t^2 / (2 T^2)) with
// T^2 = tau0^2 / (4 ln 2).
inline double gaussian_sigma(double tau0) { return tau0 / (2.0 * std::sqrt(ln2)); }

// Spectral intensity FWHM of the transform-limited pulse in angular units:
// Gamma0 = 4 ln2 / tau0  (equivalently 2*pi*0.441/tau0, the Gaussian
// time-bandwidth product tau0 * Gamma0 / (2 pi) = 2 ln2 / pi ~ 0.441).
inline double spectral_fwhm(double tau0) { return 4.0 * ln2 / tau0; }

inline double hz_to_angular(double f) { return two_pi * f; }
inline double angular_to_hz(double w) { return w / two_pi; }

} // namespace qpulse::units
