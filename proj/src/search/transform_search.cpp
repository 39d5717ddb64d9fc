#include "sgst/search/transform_search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sgst/core/error.hpp"
#include "sgst/metric/plane_wave.hpp"

namespace sgst {

namespace {

// digit -> (re, im) over the integer lattice
constexpr int kRe[5] = {0, 1, -1, 0, 0};
constexpr int kIm[5] = {0, 0, 0, 1, -1};

// negation permutation on digits: 0->0, +1<->-1, +i<->-i
constexpr std::uint8_t kNeg[5] = {0, 2, 1, 4, 3};

constexpr bool is_real_digit(std::uint8_t d) { return d <= 2; }
constexpr bool is_imag_digit(std::uint8_t d) { return d == 0 || d >= 3; }

struct GaussInt {
    int re = 0, im = 0;
};
inline GaussInt mul(std::uint8_t a, std::uint8_t b) {
    return {kRe[a] * kRe[b] - kIm[a] * kIm[b], kRe[a] * kIm[b] + kIm[a] * kRe[b]};
}

}  // namespace

Complex TransformMatrix::coefficient(std::uint8_t digit) {
    switch (digit) {
        case 0: return {0, 0};
        case 1: return {1, 0};
        case 2: return {-1, 0};
        case 3: return {0, 1};
        case 4: return {0, -1};
        default: throw ParameterError("TransformMatrix: digit out of range");
    }
}

Mat4c TransformMatrix::matrix() const {
    Mat4c m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = coefficient(digit(r, c));
    return m;
}

TransformMatrix unrank(std::uint64_t index) {
    if (index >= kFullSpaceSize) throw ParameterError("unrank: index out of range");
    TransformMatrix tm;
    tm.index = index;
    std::uint64_t v = index;
    for (int pos = 15; pos >= 0; --pos) {
        tm.digits[std::size_t(pos)] = std::uint8_t(v % 5);
        v /= 5;
    }
    return tm;
}

std::uint64_t rank_of(const std::array<std::uint8_t, 16>& digits) {
    std::uint64_t v = 0;
    for (int pos = 0; pos < 16; ++pos) v = v * 5 + digits[std::size_t(pos)];
    return v;
}

std::uint64_t subspace_size(SearchSubspace s) {
    switch (s) {
        case SearchSubspace::Full: return kFullSpaceSize;
        case SearchSubspace::ZtRows: return 390625;  // 5^8
        case SearchSubspace::Zt2x2: return 625;      // 5^4
    }
    return 0;
}

std::uint64_t subspace_to_full_index(SearchSubspace s, std::uint64_t sub_index) {
    if (sub_index >= subspace_size(s)) throw ParameterError("subspace index out of range");
    if (s == SearchSubspace::Full) return sub_index;
    std::array<std::uint8_t, 16> d{};
    d[0] = 1;  // x' = x
    d[5] = 1;  // y' = y
    std::uint64_t v = sub_index;
    if (s == SearchSubspace::ZtRows) {
        for (int pos = 15; pos >= 8; --pos) {
            d[std::size_t(pos)] = std::uint8_t(v % 5);
            v /= 5;
        }
    } else {  // Zt2x2: free entries (2,2),(2,3),(3,2),(3,3)
        const int slots[4] = {10, 11, 14, 15};
        for (int i = 3; i >= 0; --i) {
            d[std::size_t(slots[i])] = std::uint8_t(v % 5);
            v /= 5;
        }
    }
    return rank_of(d);
}

const char* to_string(SearchSubspace s) {
    switch (s) {
        case SearchSubspace::Full: return "full";
        case SearchSubspace::ZtRows: return "zt-rows";
        case SearchSubspace::Zt2x2: return "zt-2x2";
    }
    return "?";
}

std::optional<SearchSubspace> subspace_from_string(const std::string& name) {
    if (name == "full") return SearchSubspace::Full;
    if (name == "zt-rows" || name == "zt-block") return SearchSubspace::ZtRows;
    if (name == "zt-2x2") return SearchSubspace::Zt2x2;
    return std::nullopt;
}

std::uint64_t SearchSpec::effective_end() const {
    return end == 0 ? subspace_size(subspace) : end;
}

void SearchSpec::validate() const {
    const std::uint64_t size = subspace_size(subspace);
    const std::uint64_t e = effective_end();
    if (begin > e || e > size) throw ParameterError("SearchSpec: bad index range");
    if (sample_stride < 1) throw ParameterError("SearchSpec: stride must be >= 1");
}

void SearchReport::merge(const SearchReport& other) {
    candidates_examined += other.candidates_examined;
    real_metric_hits += other.real_metric_hits;
    invertible_hits += other.invertible_hits;
    hit_exemplars.insert(hit_exemplars.end(), other.hit_exemplars.begin(),
                         other.hit_exemplars.end());
    std::sort(hit_exemplars.begin(), hit_exemplars.end(),
              [](const TransformMatrix& a, const TransformMatrix& b) { return a.index < b.index; });
    if (hit_exemplars.size() > kExemplarCap) hit_exemplars.resize(kExemplarCap);
    class_indices.insert(class_indices.end(), other.class_indices.begin(),
                         other.class_indices.end());
    std::sort(class_indices.begin(), class_indices.end());
    class_indices.erase(std::unique(class_indices.begin(), class_indices.end()),
                        class_indices.end());
    distinct_classes = class_indices.size();
    wall_time_seconds += other.wall_time_seconds;
}

std::vector<double> default_phase_samples() {
    return {M_PI * 0.41421356237309515,   // pi (sqrt(2)-1)
            M_PI * 0.7320508075688772,    // pi (sqrt(3)-1)
            M_PI * 0.36787944117144233};  // pi / e
}

bool produces_real_metric(const TransformMatrix& w, const std::vector<double>& phase_samples) {
    if (phase_samples.size() < 3)
        throw ParameterError("produces_real_metric: need at least 3 phase samples");
    for (int r = 0; r < 4; ++r) {
        bool all_zero = true;
        for (int c = 0; c < 4; ++c)
            if (w.digit(r, c) != 0) all_zero = false;
        if (all_zero) return false;
    }
    const Mat4c wm = w.matrix();
    for (double a : phase_samples) {
        const Mat4c g = two_slit_metric(a).entries;
        const Mat4c out = wm.transpose() * g * wm;
        if (out.imag().cwiseAbs().maxCoeff() >= 1e-9) return false;
    }
    return true;
}

bool produces_real_metric_exact(const TransformMatrix& w) {
    const auto& d = w.digits;
    for (int r = 0; r < 4; ++r) {
        if (d[std::size_t(4 * r)] == 0 && d[std::size_t(4 * r + 1)] == 0 &&
            d[std::size_t(4 * r + 2)] == 0 && d[std::size_t(4 * r + 3)] == 0)
            return false;
    }
    // (W^T G(a) W)_{mu nu} = p01 + e^{ia} q - e^{-ia} r with
    //   p01 = W0mu W0nu + W1mu W1nu, q = W2mu W2nu, r = W3mu W3nu.
    // Real at every phase  <=>  Im(p01) = 0  and  r = -conj(q).
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu; nu < 4; ++nu) {
            const GaussInt a0 = mul(d[std::size_t(mu)], d[std::size_t(nu)]);
            const GaussInt a1 = mul(d[std::size_t(4 + mu)], d[std::size_t(4 + nu)]);
            if (a0.im + a1.im != 0) return false;
            const GaussInt q = mul(d[std::size_t(8 + mu)], d[std::size_t(8 + nu)]);
            const GaussInt r = mul(d[std::size_t(12 + mu)], d[std::size_t(12 + nu)]);
            if (r.re + q.re != 0 || r.im - q.im != 0) return false;
        }
    }
    return true;
}

bool has_real_space_rows(const TransformMatrix& w) {
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c)
            if (!is_real_digit(w.digit(r, c))) return false;
        if (!is_imag_digit(w.digit(r, 3))) return false;
    }
    for (int c = 0; c < 3; ++c)
        if (!is_imag_digit(w.digit(3, c))) return false;
    return is_real_digit(w.digit(3, 3));
}

bool is_invertible(const TransformMatrix& w) {
    return std::abs(w.matrix().determinant()) > 1e-9;
}

std::uint64_t canonical_class_index(const TransformMatrix& w) {
    std::uint64_t best = ~0ULL;
    for (int colswap = 0; colswap < 2; ++colswap) {
        for (int rowswap = 0; rowswap < 2; ++rowswap) {
            for (int signs = 0; signs < 16; ++signs) {
                std::array<std::uint8_t, 16> d{};
                for (int r = 0; r < 4; ++r) {
                    const int sr = (rowswap && r < 2) ? 1 - r : r;
                    for (int c = 0; c < 4; ++c) {
                        const int sc = (colswap && c < 2) ? 1 - c : c;
                        std::uint8_t digit = w.digits[std::size_t(4 * sr + sc)];
                        if (signs & (1 << r)) digit = kNeg[digit];
                        d[std::size_t(4 * r + c)] = digit;
                    }
                }
                best = std::min(best, rank_of(d));
            }
        }
    }
    return best;
}

namespace {

struct DigitOdometer {
    std::array<std::uint8_t, 16> digits{};

    explicit DigitOdometer(std::uint64_t start) {
        std::uint64_t v = start;
        for (int pos = 15; pos >= 0; --pos) {
            digits[std::size_t(pos)] = std::uint8_t(v % 5);
            v /= 5;
        }
    }

    void advance(std::uint64_t by) {
        int pos = 15;
        std::uint64_t carry = by;
        while (carry && pos >= 0) {
            carry += digits[std::size_t(pos)];
            digits[std::size_t(pos)] = std::uint8_t(carry % 5);
            carry /= 5;
            --pos;
        }
    }
};

bool structured_digits(const std::array<std::uint8_t, 16>& d) {
    for (int r = 0; r < 3; ++r) {
        const std::size_t base = std::size_t(4 * r);
        if (!is_real_digit(d[base]) || !is_real_digit(d[base + 1]) || !is_real_digit(d[base + 2]))
            return false;
        if (!is_imag_digit(d[base + 3])) return false;
    }
    if (!is_imag_digit(d[12]) || !is_imag_digit(d[13]) || !is_imag_digit(d[14])) return false;
    return is_real_digit(d[15]);
}

bool real_exact_digits(const std::array<std::uint8_t, 16>& d) {
    for (int r = 0; r < 4; ++r) {
        const std::size_t base = std::size_t(4 * r);
        if (d[base] == 0 && d[base + 1] == 0 && d[base + 2] == 0 && d[base + 3] == 0) return false;
    }
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu; nu < 4; ++nu) {
            const GaussInt a0 = mul(d[std::size_t(mu)], d[std::size_t(nu)]);
            const GaussInt a1 = mul(d[std::size_t(4 + mu)], d[std::size_t(4 + nu)]);
            if (a0.im + a1.im != 0) return false;
            const GaussInt q = mul(d[std::size_t(8 + mu)], d[std::size_t(8 + nu)]);
            const GaussInt r = mul(d[std::size_t(12 + mu)], d[std::size_t(12 + nu)]);
            if (r.re + q.re != 0 || r.im - q.im != 0) return false;
        }
    }
    return true;
}

// Scan of subspace ranks [from, to) sampled at the given stride offsets.
SearchReport scan_range(const SearchSpec& spec, std::uint64_t sample_from,
                        std::uint64_t sample_to) {
    SearchReport rep;
    const SearchConstraints& cons = spec.constraints;
    const bool full = spec.subspace == SearchSubspace::Full;
    std::set<std::uint64_t> classes;

    std::uint64_t sub_index = spec.begin + sample_from * spec.sample_stride;
    DigitOdometer odo(full ? sub_index : 0);

    for (std::uint64_t s = sample_from; s < sample_to;
         ++s, sub_index += spec.sample_stride) {
        const std::array<std::uint8_t, 16>* digits;
        std::array<std::uint8_t, 16> scratch;
        if (full) {
            if (s != sample_from) odo.advance(spec.sample_stride);
            digits = &odo.digits;
        } else {
            TransformMatrix tm = unrank(subspace_to_full_index(spec.subspace, sub_index));
            scratch = tm.digits;
            digits = &scratch;
        }
        ++rep.candidates_examined;

        if (cons.require_real_space_rows && !structured_digits(*digits)) continue;
        if (cons.require_real_metric && !real_exact_digits(*digits)) continue;

        TransformMatrix hit;
        hit.digits = *digits;
        hit.index = rank_of(*digits);
        ++rep.real_metric_hits;

        const bool invertible = is_invertible(hit);
        if (invertible) ++rep.invertible_hits;
        if (cons.require_invertible && !invertible) continue;

        if (rep.hit_exemplars.size() < SearchReport::kExemplarCap) rep.hit_exemplars.push_back(hit);
        if (cons.dedupe_trivial && invertible) classes.insert(canonical_class_index(hit));
    }
    rep.class_indices.assign(classes.begin(), classes.end());
    rep.distinct_classes = rep.class_indices.size();
    return rep;
}

SearchReport run_samples(const SearchSpec& spec, unsigned workers, std::uint64_t sample_from,
                         std::uint64_t sample_to) {
    const std::uint64_t n = sample_to - sample_from;
    if (workers <= 1 || n < 4096) return scan_range(spec, sample_from, sample_to);

    std::vector<SearchReport> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = sample_from + n * w / workers;
        const std::uint64_t hi = sample_from + n * (w + 1) / workers;
        pool.emplace_back([&spec, &parts, w, lo, hi] { parts[w] = scan_range(spec, lo, hi); });
    }
    for (auto& t : pool) t.join();
    SearchReport rep;
    for (const auto& p : parts) rep.merge(p);
    return rep;
}

std::uint64_t sample_count(const SearchSpec& spec) {
    const std::uint64_t span = spec.effective_end() - spec.begin;
    return (span + spec.sample_stride - 1) / spec.sample_stride;
}

nlohmann::json report_to_json(const SearchReport& rep) {
    nlohmann::json j;
    j["candidates_examined"] = rep.candidates_examined;
    j["real_metric_hits"] = rep.real_metric_hits;
    j["invertible_hits"] = rep.invertible_hits;
    j["distinct_classes"] = rep.distinct_classes;
    std::vector<std::uint64_t> ex;
    for (const auto& h : rep.hit_exemplars) ex.push_back(h.index);
    j["hit_exemplars"] = ex;
    j["class_indices"] = rep.class_indices;
    return j;
}

SearchReport report_from_json(const nlohmann::json& j) {
    SearchReport rep;
    rep.candidates_examined = j.at("candidates_examined").get<std::uint64_t>();
    rep.real_metric_hits = j.at("real_metric_hits").get<std::uint64_t>();
    rep.invertible_hits = j.at("invertible_hits").get<std::uint64_t>();
    for (std::uint64_t idx : j.at("hit_exemplars")) rep.hit_exemplars.push_back(unrank(idx));
    rep.class_indices = j.at("class_indices").get<std::vector<std::uint64_t>>();
    rep.distinct_classes = rep.class_indices.size();
    return rep;
}

nlohmann::json spec_to_json(const SearchSpec& spec) {
    nlohmann::json j;
    j["subspace"] = to_string(spec.subspace);
    j["begin"] = spec.begin;
    j["end"] = spec.effective_end();
    j["stride"] = spec.sample_stride;
    j["require_real_metric"] = spec.constraints.require_real_metric;
    j["require_real_space_rows"] = spec.constraints.require_real_space_rows;
    j["require_invertible"] = spec.constraints.require_invertible;
    j["dedupe_trivial"] = spec.constraints.dedupe_trivial;
    return j;
}

}  // namespace

SearchReport run_search(const SearchSpec& spec, unsigned workers) {
    spec.validate();
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep = run_samples(spec, workers, 0, sample_count(spec));
    rep.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SearchReport run_search_checkpointed(const SearchSpec& spec, unsigned workers,
                                     const std::string& checkpoint_path,
                                     std::uint64_t checkpoint_every) {
    spec.validate();
    if (checkpoint_every == 0) throw ParameterError("checkpoint_every must be > 0");
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t total = sample_count(spec);

    SearchReport acc;
    std::uint64_t next_sample = 0;
    {
        std::ifstream in(checkpoint_path, std::ios::binary);
        if (in) {
            nlohmann::json j = nlohmann::json::parse(in);
            if (j.at("spec") != spec_to_json(spec))
                throw ParameterError("checkpoint does not match the requested search spec");
            next_sample = j.at("next_sample").get<std::uint64_t>();
            acc = report_from_json(j.at("partial_report"));
        }
    }

    while (next_sample < total) {
        const std::uint64_t chunk_end = std::min(total, next_sample + checkpoint_every);
        SearchReport part = run_samples(spec, workers, next_sample, chunk_end);
        acc.merge(part);
        next_sample = chunk_end;

        nlohmann::json j;
        j["spec"] = spec_to_json(spec);
        j["next_sample"] = next_sample;
        j["last_completed_index"] =
            next_sample == 0 ? 0 : spec.begin + (next_sample - 1) * spec.sample_stride;
        j["partial_report"] = report_to_json(acc);
        const std::string tmp = checkpoint_path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw ParameterError("cannot write checkpoint " + tmp);
            out << j.dump(2) << "\n";
        }
        std::rename(tmp.c_str(), checkpoint_path.c_str());
    }

    acc.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return acc;
}

}  // namespace sgst
