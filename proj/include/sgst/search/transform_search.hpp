#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgst/metric/metric4.hpp"

namespace sgst {

/// Candidate transformation over the five-element coefficient set.
/// Digit order (fixed, documented): digit d -> coefficient
///   0 -> 0,  1 -> +1,  2 -> -1,  3 -> +i,  4 -> -i.
/// The rank is the base-5 number whose most significant digit is entry (0,0),
/// reading the matrix row-major; rank(unrank(i)) == i.
struct TransformMatrix {
    std::array<std::uint8_t, 16> digits{};
    std::uint64_t index = 0;

    static Complex coefficient(std::uint8_t digit);
    Mat4c matrix() const;
    std::uint8_t digit(int row, int col) const { return digits[std::size_t(4 * row + col)]; }
};

inline constexpr std::uint64_t kFullSpaceSize = 152587890625ULL;  // 5^16

TransformMatrix unrank(std::uint64_t index);
std::uint64_t rank_of(const std::array<std::uint8_t, 16>& digits);

/// Search subspaces:
///  Full   — all 5^16 candidates.
///  ZtRows — x',y' rows pinned to the identity, z',t' rows free (5^8).
///  Zt2x2  — as ZtRows but z',t' rows confined to the z,t columns (5^4).
enum class SearchSubspace { Full, ZtRows, Zt2x2 };

std::uint64_t subspace_size(SearchSubspace s);
std::uint64_t subspace_to_full_index(SearchSubspace s, std::uint64_t sub_index);
const char* to_string(SearchSubspace s);
std::optional<SearchSubspace> subspace_from_string(const std::string& name);

struct SearchConstraints {
    bool require_real_metric = true;
    bool require_real_space_rows = false;
    bool require_invertible = false;
    bool dedupe_trivial = false;
};

struct SearchSpec {
    SearchSubspace subspace = SearchSubspace::ZtRows;
    std::uint64_t begin = 0;                 // half-open range in subspace ranks
    std::uint64_t end = 0;                   // 0 means "whole subspace"
    std::uint64_t sample_stride = 1;
    SearchConstraints constraints;

    std::uint64_t effective_end() const;
    void validate() const;
};

struct SearchReport {
    std::uint64_t candidates_examined = 0;
    std::uint64_t real_metric_hits = 0;   // hits per the constraint set (before invertibility)
    std::uint64_t invertible_hits = 0;    // hits that are also invertible
    std::uint64_t distinct_classes = 0;   // equivalence classes among invertible hits
    std::vector<TransformMatrix> hit_exemplars;  // ascending index, capped
    std::vector<std::uint64_t> class_indices;    // canonical ranks (dedupe_trivial only)
    double wall_time_seconds = 0.0;

    static constexpr std::size_t kExemplarCap = 100;

    double hit_rate() const {
        return candidates_examined ? double(real_metric_hits) / double(candidates_examined) : 0.0;
    }
    void merge(const SearchReport& other);
};

/// Default realness probe phases: irrational multiples of pi, so trig
/// coincidences cannot fake realness.
std::vector<double> default_phase_samples();

/// Reference realness test: W^T G(a) W with G(a) = diag(1,1,e^{ia},-e^{-ia})
/// must have every imaginary entry below 1e-9 at every sampled phase.
/// Matrices with an all-zero row are rejected outright (degenerate transform).
/// At least 3 phases required.
bool produces_real_metric(const TransformMatrix& w, const std::vector<double>& phase_samples);

/// Exact integer-arithmetic equivalent of produces_real_metric over the
/// coefficient lattice (phase-free). Equivalence with the sampled-phase test
/// is asserted in the test suite; the scan kernel uses this path.
bool produces_real_metric_exact(const TransformMatrix& w);

/// Row-structure filter: x',y',z' rows use real coefficients on x,y,z and an
/// imaginary one on t; the t' row uses imaginary coefficients on x,y,z and a
/// real one on t.
bool has_real_space_rows(const TransformMatrix& w);

bool is_invertible(const TransformMatrix& w);

/// Canonical representative rank under the trivial-equivalence group:
/// row sign flips, swap of the x',y' rows, swap of the x,y columns
/// (order 128). Minimum rank over the orbit.
std::uint64_t canonical_class_index(const TransformMatrix& w);

SearchReport run_search(const SearchSpec& spec, unsigned workers);

/// As run_search, but persists progress to a JSON checkpoint after every
/// `checkpoint_every` sampled candidates and resumes from an existing,
/// matching checkpoint file.
SearchReport run_search_checkpointed(const SearchSpec& spec, unsigned workers,
                                     const std::string& checkpoint_path,
                                     std::uint64_t checkpoint_every);

}  // namespace sgst
