#pragma once

#include <cmath>

namespace sgst {

/// Planck-scale constants. All values derive from CODATA 2018:
/// h and c are exact by SI definition, G is the CODATA recommended value.
/// The time and mass units use the reduced combinations
///   t_p = sqrt(h G / (2 pi c^5)),   m_p = sqrt(h c / (2 pi G)),
/// so that t_p * m_p = hbar / c^2 holds as an algebraic identity.
/// pi_p is the hexagonal "granular pi", exactly 3.
struct PlanckUnits {
    double h;     // Planck constant, J s
    double G;     // gravitational constant, m^3 kg^-1 s^-2
    double c;     // speed of light, m/s
    double l_p;   // Planck length, m
    double t_p;   // Planck time, s
    double m_p;   // Planck mass, kg
    double pi_p;  // granular pi, dimensionless (exactly 3)

    double hbar() const { return h / (2.0 * M_PI); }
};

inline PlanckUnits planck_units() {
    PlanckUnits u;
    u.h = 6.62607015e-34;    // exact (SI 2019)
    u.c = 299792458.0;       // exact (SI)
    u.G = 6.67430e-11;       // CODATA 2018
    const double hbar = u.h / (2.0 * M_PI);
    u.t_p = std::sqrt(hbar * u.G / std::pow(u.c, 5));
    u.m_p = std::sqrt(hbar * u.c / u.G);
    u.l_p = u.c * u.t_p;
    u.pi_p = 3.0;
    return u;
}

}  // namespace sgst
