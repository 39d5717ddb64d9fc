#pragma once

#include <cstdint>
#include <vector>

#include "sgst/core/constants.hpp"
#include "sgst/core/rng.hpp"

namespace sgst {

/// Torsional-oscillation drive: the sequence-time triangle wave with
/// half-period t_bar (in Planck-time steps), one angle axis per coordinate
/// axis, axes scheduled round-robin. angle_measure < 1 corrupts steps: with
/// probability 1 - measure the drive increment is replaced by a fair +-1
/// coin.
struct OscillationConfig {
    double t_bar = 32.0;
    double angle_measure = 1.0;
    int axes = 3;  // 1 or 3
    std::uint64_t steps = 8192;
    RngStream rng;

    void validate() const;
    /// Per-axis drive period in global steps.
    double drive_period() const { return 2.0 * axes * t_bar; }
    double drive_frequency() const { return 1.0 / drive_period(); }
};

/// Integer angle state per axis after every global step. The drive follows
/// the granular triangle round(t_bar * tri(m / t_bar)) one rung at a time,
/// so a half-period below one step self-cancels — the oscillation cannot be
/// represented on the lattice and only the noise remains.
std::vector<std::vector<std::int64_t>> simulate_oscillation(const OscillationConfig& config);

/// t_bar for a mass: h / (2 c^2 t_p m) for one axis, h / (6 c^2 t_p m) for
/// three (the rotations are scheduled serially, so a full cycle takes
/// 2*axes*t_bar).
double t_bar_of_mass(double mass_kg, int axes, const PlanckUnits& units = planck_units());

/// Mass whose t_bar equals the given value (inverse of t_bar_of_mass).
double mass_of_t_bar(double t_bar, int axes, const PlanckUnits& units = planck_units());

/// t_bar of the Planck mass: pi/3 with the circular pi, exactly 1 with the
/// granular pi_p = 3.
double t_bar_planck(bool use_planck_pi, const PlanckUnits& units = planck_units());

}  // namespace sgst
