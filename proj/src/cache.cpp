#include "rcc/cache.hpp"

#include "rcc/invariant_key.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rcc {

std::vector<std::string> CacheFile::load(const std::string& path, GWEngine& engine) {
    std::vector<std::string> warnings;
    std::ifstream in(path);
    if (!in) return warnings;  // no cache yet: cold start, not an error

    std::string line;
    if (!std::getline(in, line)) return warnings;
    if (line != kVersionLine) {
        warnings.push_back("cache " + path + ": version line '" + line +
                           "' does not match '" + kVersionLine + "', ignoring file");
        return warnings;
    }

    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto eq = line.find('=');
        bool ok = eq != std::string::npos;
        if (ok) {
            try {
                InvariantKey key = InvariantKey::parse(line.substr(0, eq));
                Rational value = Rational::from_string(line.substr(eq + 1));
                engine.preload(key.to_string(), value);
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) {
            std::ostringstream os;
            os << "cache " << path << ": line " << lineno
               << " unreadable, skipping (will recompute)";
            warnings.push_back(os.str());
        }
    }
    return warnings;
}

void CacheFile::save(const std::string& path, const GWEngine& engine) {
    auto entries = engine.snapshot();
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp);
        out << kVersionLine << "\n";
        for (const auto& [key, value] : entries) out << key << "=" << value.to_string() << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cache: cannot rename " + tmp + " to " + path);
}

}  // namespace rcc
