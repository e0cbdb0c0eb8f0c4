#pragma once

#include <optional>
#include <string>
#include <vector>

namespace reltype {

// One [section] of a corpus manifest: instance name plus key = value lines.
struct ManifestEntry {
    std::string name;
    std::vector<std::pair<std::string, std::string>> kv;

    std::optional<std::string> get(const std::string& key) const {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        return std::nullopt;
    }
    std::string get_or(const std::string& key, const std::string& dflt) const {
        auto v = get(key);
        return v ? *v : dflt;
    }
};

// Line-based format: '#' comments, [name] section headers, key = value.
std::vector<ManifestEntry> parse_manifest(const std::string& text);
std::vector<ManifestEntry> load_manifest_file(const std::string& path);

}  // namespace reltype
