#pragma once

// Unit system: energies in eV, lengths in angstrom, masses in amu.
namespace morse::units {

inline constexpr double hbar_c_eV_angstrom = 1973.269804;
inline constexpr double amu_eV = 931.49410242e6;  // m_u c^2

}  // namespace morse::units
