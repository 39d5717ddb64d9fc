#include "sgst/walk/walk.hpp"

#include <cmath>
#include <unordered_map>

#include "sgst/core/error.hpp"

namespace sgst {

void WalkConfig::validate() const {
    for (double m : measures)
        if (!(m >= 0.0 && m <= 1.0)) throw ParameterError("WalkConfig: measure outside [0,1]");
    if (!(indeterminacy >= 0.0 && indeterminacy <= 1.0))
        throw ParameterError("WalkConfig: indeterminacy outside [0,1]");
    if (steps < 1) throw ParameterError("WalkConfig: steps must be >= 1");
}

VenueState step(const VenueState& state, const WalkConfig& config, RngStream& rng) {
    VenueState next = state;
    if (coin(rng, config.indeterminacy) == CoinFace::Tails) return next;

    int backward_time_migrations = 0;
    auto migrate_time = [&] {
        const int dir = coin(rng, config.measures[3]) == CoinFace::Heads ? 1 : -1;
        next.t_coord += dir;
        next.helix_rung += dir;
        next.tau_phase = std::int32_t((next.tau_phase + 1) % 6);
        ++next.time_migrations;
        if (dir < 0) ++backward_time_migrations;
    };

    for (int axis = 0; axis < 3; ++axis) {
        const double m = state.measures_complemented ? 1.0 - config.measures[std::size_t(axis)]
                                                     : config.measures[std::size_t(axis)];
        const int dir = coin(rng, m) == CoinFace::Heads ? 1 : -1;
        next.spatial[std::size_t(axis)] += dir;
        ++next.space_migrations;
        if (config.ds2_conservation) migrate_time();
    }
    if (!config.ds2_conservation) migrate_time();

    if (backward_time_migrations % 2 == 1)
        next.measures_complemented = !next.measures_complemented;
    return next;
}

namespace {

double variance(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= double(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return var / double(xs.size());
}

}  // namespace

WalkSummary run_walk(const WalkConfig& config, std::uint64_t walkers, const RngStream& rng) {
    config.validate();
    if (walkers < 1) throw ParameterError("run_walk: walkers must be >= 1");

    WalkSummary summary;
    for (auto& v : summary.terminal_positions) v.reserve(walkers);

    constexpr std::uint64_t kCoarseWindow = 16;
    std::uint64_t steps_total = 0, steps_superluminal = 0;
    std::uint64_t segments_total = 0, segments_superluminal = 0;

    for (std::uint64_t w = 0; w < walkers; ++w) {
        RngStream stream = rng.substream(w);
        VenueState s;
        VenueState window_start = s;
        for (std::uint64_t n = 0; n < config.steps; ++n) {
            const VenueState before = s;
            s = step(s, config, stream);

            double dr2 = 0.0;
            for (int a = 0; a < 3; ++a) {
                const double d = double(s.spatial[std::size_t(a)] - before.spatial[std::size_t(a)]);
                dr2 += d * d;
            }
            const double dt = double(std::llabs(s.t_coord - before.t_coord));
            ++steps_total;
            if (dr2 > dt * dt) ++steps_superluminal;

            if ((n + 1) % kCoarseWindow == 0 || n + 1 == config.steps) {
                double seg2 = 0.0;
                for (int a = 0; a < 3; ++a) {
                    const double d =
                        double(s.spatial[std::size_t(a)] - window_start.spatial[std::size_t(a)]);
                    seg2 += d * d;
                }
                const double segt = double(std::llabs(s.t_coord - window_start.t_coord));
                ++segments_total;
                if (seg2 > segt * segt) ++segments_superluminal;
                window_start = s;
            }
        }
        for (int a = 0; a < 3; ++a)
            summary.terminal_positions[std::size_t(a)].push_back(double(s.spatial[std::size_t(a)]));
        summary.terminal_positions[3].push_back(double(s.t_coord));
        summary.total_space_migrations += s.space_migrations;
        summary.total_time_migrations += s.time_migrations;
    }

    for (int a = 0; a < 4; ++a)
        summary.displacement_variance[std::size_t(a)] =
            variance(summary.terminal_positions[std::size_t(a)]);
    summary.superluminal_fraction =
        steps_total ? double(steps_superluminal) / double(steps_total) : 0.0;
    summary.superluminal_fraction_coarse =
        segments_total ? double(segments_superluminal) / double(segments_total) : 0.0;
    return summary;
}

std::vector<WalkPathSample> walk_path(const WalkConfig& config, RngStream rng) {
    config.validate();
    std::vector<WalkPathSample> path;
    path.reserve(config.steps + 1);
    VenueState s;
    path.push_back({0, 0, 0, 0, 0, 0});
    for (std::uint64_t n = 1; n <= config.steps; ++n) {
        s = step(s, config, rng);
        path.push_back({n, s.spatial[0], s.spatial[1], s.spatial[2], s.t_coord, s.tau_phase});
    }
    return path;
}

HelixTime helix_time(const VenueState& state, const PlanckUnits& units) {
    HelixTime h;
    h.t_c = double(state.t_coord) * units.t_p;
    // one hexagon vertex = (2 pi_p / 6) granular radians = pi/3 on the circle
    h.tau_angle = double(state.tau_phase) * (2.0 * units.pi_p / 6.0) * (M_PI / units.pi_p);
    h.complex_repr = h.t_c * Complex(std::cos(h.tau_angle), std::sin(h.tau_angle));
    return h;
}

double helix_cycle_frequency(const PlanckUnits& units) { return 2.0 * units.pi_p / units.t_p; }

std::uint64_t merge_statistics(const WalkConfig& config, std::uint64_t walkers,
                               std::int64_t lattice_extent, MergeStart start,
                               const RngStream& rng) {
    config.validate();
    if (lattice_extent < 1) throw ParameterError("merge_statistics: lattice extent must be >= 1");
    if (walkers < 1) throw ParameterError("merge_statistics: walkers must be >= 1");

    std::vector<VenueState> states(walkers);
    std::vector<RngStream> streams;
    streams.reserve(walkers);
    RngStream placement = rng.substream(~0ULL);
    for (std::uint64_t w = 0; w < walkers; ++w) {
        streams.push_back(rng.substream(w));
        if (start == MergeStart::UniformRandom) {
            for (int a = 0; a < 3; ++a)
                states[w].spatial[std::size_t(a)] =
                    std::int64_t(placement.below(std::uint64_t(lattice_extent)));
        }
    }

    const auto wrap = [&](std::int64_t v) {
        std::int64_t m = v % lattice_extent;
        return m < 0 ? m + lattice_extent : m;
    };

    std::uint64_t merges = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> occupancy;
    for (std::uint64_t n = 0; n < config.steps; ++n) {
        occupancy.clear();
        for (std::uint64_t w = 0; w < walkers; ++w) {
            states[w] = step(states[w], config, streams[w]);
            if (!states[w].empty) continue;
            const std::uint64_t key =
                std::uint64_t(wrap(states[w].spatial[0])) |
                (std::uint64_t(wrap(states[w].spatial[1])) << 16) |
                (std::uint64_t(wrap(states[w].spatial[2])) << 32) |
                (std::uint64_t(states[w].t_coord & 0xffff) << 48);
            ++occupancy[key];
        }
        for (const auto& [key, count] : occupancy) {
            (void)key;
            merges += count * (count - 1) / 2;
        }
    }
    return merges;
}

double wiener_normalized_terminal_variance(std::uint64_t steps, std::uint64_t walkers,
                                           const RngStream& rng) {
    if (steps < 1 || walkers < 2) throw ParameterError("wiener check: need steps>=1, walkers>=2");
    const double scale = 1.0 / std::sqrt(double(steps));
    std::vector<double> terminal(walkers, 0.0);
    for (std::uint64_t w = 0; w < walkers; ++w) {
        RngStream stream = rng.substream(w);
        double x = 0.0;
        for (std::uint64_t n = 0; n < steps; ++n)
            x += coin(stream, 0.5) == CoinFace::Heads ? scale : -scale;
        terminal[w] = x;
    }
    return variance(terminal);
}

}  // namespace sgst
