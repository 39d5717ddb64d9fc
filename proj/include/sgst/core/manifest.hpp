#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sgst {

/// Reproducibility envelope written once per experiment run: the experiment
/// name, seed, the full ordered parameter list, the toolkit version, and a
/// SHA-256 per output file. Identical (experiment, seed, parameters) must
/// reproduce identical output hashes.
struct RunManifest {
    std::string experiment_name;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> parameters;  // insertion-ordered
    std::string toolkit_version;
    std::vector<std::pair<std::string, std::string>> output_files;  // (path, sha256)

    void set_param(const std::string& key, const std::string& value);
    const std::string* find_param(const std::string& key) const;

    /// Hashes the file and appends it to output_files.
    void add_output(const std::string& path);

    std::string to_json() const;          // single JSON document, stable key order
    static RunManifest from_json(const std::string& text);

    void save(const std::string& path) const;
    static RunManifest load(const std::string& path);
};

}  // namespace sgst
