#pragma once

namespace rbcom {

/// Fixed physical constants in SI units (CODATA 2018; h, c, e, k are exact).
struct PhysicalConstants {
    double h;          // Planck constant [J s]
    double c;          // speed of light in vacuum [m/s]
    double e;          // elementary charge [C]
    double k;          // Boltzmann constant [J/K]
    double epsilon_0;  // vacuum permittivity [F/m]
};

inline constexpr PhysicalConstants kCodata2018{
    6.62607015e-34,
    299792458.0,
    1.602176634e-19,
    1.380649e-23,
    8.8541878128e-12,
};

}  // namespace rbcom
