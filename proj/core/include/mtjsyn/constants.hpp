#pragma once

#include <numbers>

namespace mtjsyn {

/// Physical constants in SI units (CODATA 2010 values, fixed for bit-reproducible output).
struct PhysicalConstants {
    static constexpr double mu_B = 9.27400968e-24;  ///< Bohr magneton [J/T]
    static constexpr double q = 1.602176565e-19;    ///< elementary charge [C]
    static constexpr double hbar = 1.054571726e-34; ///< reduced Planck constant [J s]
    static constexpr double mu_0 = 4.0e-7 * std::numbers::pi; ///< vacuum permeability [T m/A]
    static constexpr double k_B = 1.3806488e-23;    ///< Boltzmann constant [J/K]
    /// Electron gyromagnetic ratio 2 mu_B mu_0 / hbar [m/(A s)].
    static constexpr double gamma = 2.0 * mu_B * mu_0 / hbar;
};

namespace units {
inline constexpr double nm = 1e-9;
inline constexpr double ns = 1e-9;
inline constexpr double ps = 1e-12;
inline constexpr double uA = 1e-6;
inline constexpr double mS = 1e-3;
inline constexpr double kA_per_m = 1e3;
inline constexpr double hour = 3600.0;
inline constexpr double year = 365.25 * 24.0 * hour;
} // namespace units

} // namespace mtjsyn
