#pragma once

namespace pyrosim {

/// Vacuum permittivity, F/m.
inline constexpr double vacuum_permittivity = 8.8541878128e-12;

constexpr double celsius_to_kelvin(double celsius) { return celsius + 273.15; }
constexpr double kelvin_to_celsius(double kelvin) { return kelvin - 273.15; }

} // namespace pyrosim
