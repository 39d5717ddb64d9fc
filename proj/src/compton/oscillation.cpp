#include "sgst/compton/oscillation.hpp"

#include <cmath>

#include "sgst/core/error.hpp"

namespace sgst {

void OscillationConfig::validate() const {
    if (!(t_bar > 0.0)) throw ParameterError("OscillationConfig: t_bar must be > 0");
    if (!(angle_measure >= 0.0 && angle_measure <= 1.0))
        throw ParameterError("OscillationConfig: angle_measure outside [0,1]");
    if (axes != 1 && axes != 3) throw ParameterError("OscillationConfig: axes must be 1 or 3");
    if (double(steps) < 64.0 * t_bar)
        throw ParameterError("OscillationConfig: steps must be >= 64 * t_bar");
}

namespace {

// unit triangle wave: period 2, tri(0)=0, tri(1)=1
double tri01(double v) {
    v = std::fmod(v, 2.0);
    if (v < 0.0) v += 2.0;
    return v <= 1.0 ? v : 2.0 - v;
}

}  // namespace

std::vector<std::vector<std::int64_t>> simulate_oscillation(const OscillationConfig& config) {
    config.validate();
    RngStream rng = config.rng;

    std::vector<std::vector<std::int64_t>> series(
        std::size_t(config.axes), std::vector<std::int64_t>(config.steps, 0));
    std::vector<std::int64_t> angle(std::size_t(config.axes), 0);
    std::vector<std::int64_t> drive_pos(std::size_t(config.axes), 0);
    std::vector<std::uint64_t> own_turn(std::size_t(config.axes), 0);

    for (std::uint64_t n = 0; n < config.steps; ++n) {
        const std::size_t a = std::size_t(n % std::uint64_t(config.axes));
        ++own_turn[a];
        const double ideal = config.t_bar * tri01(double(own_turn[a]) / config.t_bar);
        const std::int64_t target = std::llround(ideal);
        std::int64_t drive = 0;
        if (target > drive_pos[a]) drive = 1;
        else if (target < drive_pos[a]) drive = -1;
        drive_pos[a] += drive;

        std::int64_t increment = drive;
        if (coin(rng, config.angle_measure) == CoinFace::Tails)
            increment = coin(rng, 0.5) == CoinFace::Heads ? 1 : -1;
        angle[a] += increment;

        for (std::size_t b = 0; b < std::size_t(config.axes); ++b)
            series[b][n] = angle[b];
    }
    return series;
}

double t_bar_of_mass(double mass_kg, int axes, const PlanckUnits& units) {
    if (!(mass_kg > 0.0)) throw ParameterError("t_bar_of_mass: mass must be > 0");
    if (axes != 1 && axes != 3) throw ParameterError("t_bar_of_mass: axes must be 1 or 3");
    return units.h / (2.0 * axes * units.c * units.c * units.t_p * mass_kg);
}

double mass_of_t_bar(double t_bar, int axes, const PlanckUnits& units) {
    if (!(t_bar > 0.0)) throw ParameterError("mass_of_t_bar: t_bar must be > 0");
    if (axes != 1 && axes != 3) throw ParameterError("mass_of_t_bar: axes must be 1 or 3");
    return units.h / (2.0 * axes * units.c * units.c * units.t_p * t_bar);
}

double t_bar_planck(bool use_planck_pi, const PlanckUnits& units) {
    return (use_planck_pi ? units.pi_p : M_PI) / 3.0;
}

}  // namespace sgst
