#include "sgst/core/manifest.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sgst/core/error.hpp"
#include "sgst/core/hash.hpp"

namespace sgst {

using ordered_json = nlohmann::ordered_json;

void RunManifest::set_param(const std::string& key, const std::string& value) {
    for (auto& kv : parameters) {
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    }
    parameters.emplace_back(key, value);
}

const std::string* RunManifest::find_param(const std::string& key) const {
    for (const auto& kv : parameters)
        if (kv.first == key) return &kv.second;
    return nullptr;
}

void RunManifest::add_output(const std::string& path) {
    output_files.emplace_back(path, sha256_file_hex(path));
}

std::string RunManifest::to_json() const {
    ordered_json j;
    j["experiment"] = experiment_name;
    j["seed"] = seed;
    ordered_json params = ordered_json::object();
    for (const auto& kv : parameters) params[kv.first] = kv.second;
    j["parameters"] = params;
    j["toolkit_version"] = toolkit_version;
    ordered_json outs = ordered_json::array();
    for (const auto& of : output_files)
        outs.push_back({{"path", of.first}, {"sha256", of.second}});
    j["outputs"] = outs;
    return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    RunManifest m;
    m.experiment_name = j.at("experiment").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    for (auto it = j.at("parameters").begin(); it != j.at("parameters").end(); ++it)
        m.parameters.emplace_back(it.key(), it.value().get<std::string>());
    m.toolkit_version = j.at("toolkit_version").get<std::string>();
    for (const auto& of : j.at("outputs"))
        m.output_files.emplace_back(of.at("path").get<std::string>(),
                                    of.at("sha256").get<std::string>());
    return m;
}

void RunManifest::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("manifest: cannot open " + path + " for writing");
    out << to_json();
}

RunManifest RunManifest::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("manifest: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

}  // namespace sgst
