#pragma once

namespace focalfield::constants {

// 2019 SI exact values
inline constexpr double planck_h = 6.62607015e-34;       // J s
inline constexpr double boltzmann_kB = 1.380649e-23;     // J/K
inline constexpr double hbar = 1.054571817e-34;          // J s

// 87Rb atomic mass, CODATA-consistent (86.909180 u)
inline constexpr double rb87_mass_kg = 1.44316060e-25;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace focalfield::constants
