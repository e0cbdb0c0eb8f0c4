#include "reltype/manifest.hpp"

#include <fstream>
#include <sstream>

#include "reltype/error.hpp"

namespace reltype {

namespace {
std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}
}  // namespace

std::vector<ManifestEntry> parse_manifest(const std::string& text) {
    std::vector<ManifestEntry> entries;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ParseError("manifest line " + std::to_string(lineno) +
                                     ": unterminated section header",
                                 0);
            std::string name = trim(t.substr(1, t.size() - 2));
            if (name.empty())
                throw ParseError("manifest line " + std::to_string(lineno) + ": empty name", 0);
            entries.push_back({name, {}});
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("manifest line " + std::to_string(lineno) + ": expected key = value",
                             0);
        if (entries.empty())
            throw ParseError("manifest line " + std::to_string(lineno) +
                                 ": key outside of a [section]",
                             0);
        entries.back().kv.push_back({trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
    }
    return entries;
}

std::vector<ManifestEntry> load_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open manifest '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str());
}

}  // namespace reltype
