#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sgst/core/constants.hpp"
#include "sgst/core/rng.hpp"
#include "sgst/types.hpp"

namespace sgst {

/// Parameters of the granular migration process. Measures are the per-axis
/// heads probabilities (x, y, z, t); indeterminacy is the probability that a
/// venue migrates at all when due for a coin flip. Quanta are carried for
/// unit conversion only — the walk state itself is exact integers.
struct WalkConfig {
    std::array<double, 4> measures{0.5, 0.5, 0.5, 0.5};
    double indeterminacy = 1.0;
    double step_length = 1.616255e-35;  // meters; defaults near l_p
    double step_time = 5.391247e-44;    // seconds; defaults near t_p
    bool ds2_conservation = false;
    std::uint64_t steps = 100;

    void validate() const;
};

/// One venue. Spatial coordinates in units of step_length, coordinate time
/// in units of step_time, all exact integers; tau_phase is the hexagonal
/// sequence phase (mod 6). measures_complemented tracks sequence reversals:
/// when set, every spatial measure m acts as 1-m.
struct VenueState {
    std::array<std::int64_t, 3> spatial{0, 0, 0};
    std::int64_t t_coord = 0;
    std::int32_t tau_phase = 0;
    std::int64_t helix_rung = 0;
    bool measures_complemented = false;
    bool empty = true;

    std::uint64_t space_migrations = 0;
    std::uint64_t time_migrations = 0;
};

struct WalkSummary {
    std::array<std::vector<double>, 4> terminal_positions;  // x,y,z,t in quanta
    std::array<double, 4> displacement_variance{0, 0, 0, 0};
    double superluminal_fraction = 0.0;         // per single step
    double superluminal_fraction_coarse = 0.0;  // per 16-step segment
    std::uint64_t merge_events = 0;
    std::uint64_t total_space_migrations = 0;
    std::uint64_t total_time_migrations = 0;
};

/// One migration attempt. The indeterminacy coin gates the whole step
/// (space and time atomically); if it passes, every spatial axis migrates
/// +-1 by its (possibly complemented) measure coin. Time migrates once per
/// step on its own coin, or — with ds2_conservation — once per spatial
/// migration, direction by the time measure. tau_phase advances on every
/// time migration; a step with an odd number of backward time migrations
/// complements the spatial measures from the next step on.
VenueState step(const VenueState& state, const WalkConfig& config, RngStream& rng);

WalkSummary run_walk(const WalkConfig& config, std::uint64_t walkers, const RngStream& rng);

/// Single-walker trajectory, one row per step: (step, x, y, z, t, tau_phase).
struct WalkPathSample {
    std::uint64_t step;
    std::int64_t x, y, z, t;
    std::int32_t tau_phase;
};
std::vector<WalkPathSample> walk_path(const WalkConfig& config, RngStream rng);

struct HelixTime {
    double t_c;            // seconds
    double tau_angle;      // radians
    Complex complex_repr;  // t_c * e^{i tau}
};

/// Helix decomposition of the venue's time state. The hexagonal phase maps
/// onto the circle as tau_phase * pi/3, so six phases close one cycle, and
/// |complex_repr| == |t_c| exactly.
HelixTime helix_time(const VenueState& state, const PlanckUnits& units = planck_units());

/// The paper-convention cycle frequency 2*pi_p/t_p (= 6/t_p) in Hz, for a
/// transition rate of one per Planck time.
double helix_cycle_frequency(const PlanckUnits& units = planck_units());

enum class MergeStart { SameSite, UniformRandom };

/// Counts same-(position, t_coord) coincident pairs among empty walkers at
/// each step on a periodic box of the given per-axis extent.
std::uint64_t merge_statistics(const WalkConfig& config, std::uint64_t walkers,
                               std::int64_t lattice_extent, MergeStart start,
                               const RngStream& rng);

/// Terminal-value variance of the normalized Wiener sum (steps X/sqrt(N));
/// tends to 1 as the step count grows.
double wiener_normalized_terminal_variance(std::uint64_t steps, std::uint64_t walkers,
                                           const RngStream& rng);

}  // namespace sgst
