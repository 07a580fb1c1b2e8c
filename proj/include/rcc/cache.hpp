#pragma once

// Plain-text persistent store for the engine's memo table.
//
// Format: first line "rccount-cache v1", then one "<key>=<value>" line per
// invariant, sorted lexicographically by key. Values are decimal integers or
// p/q in lowest terms. Saving goes through a temp file and rename, and a
// load-save cycle reproduces the file byte for byte. A version mismatch
// refuses the whole file; an unreadable line is skipped. Both produce
// warnings and the engine just recomputes what it needs.

#include "rcc/gw_engine.hpp"

#include <string>
#include <vector>

namespace rcc {

class CacheFile {
public:
    static constexpr const char* kVersionLine = "rccount-cache v1";

    // Feeds cached values into the engine; returns human-readable warnings.
    static std::vector<std::string> load(const std::string& path, GWEngine& engine);

    static void save(const std::string& path, const GWEngine& engine);
};

}  // namespace rcc
