#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcc/cache.hpp"
#include "rcc/cli_app.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rcc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("rccount-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static inline int counter = 0;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Redirect cout/cerr for in-process CLI runs.
struct Capture {
    std::ostringstream out, err;
    std::streambuf *old_out, *old_err;
    Capture() : old_out(std::cout.rdbuf(out.rdbuf())), old_err(std::cerr.rdbuf(err.rdbuf())) {}
    ~Capture() {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
    }
};

}  // namespace

TEST_CASE("cache round trip is byte stable and warm results match cold") {
    TempDir tmp;
    const auto path = tmp.file("cache.txt");

    GWEngine cold;
    Rational value = cold.nd_plane(4);
    CHECK(value == Rational(620));
    CacheFile::save(path, cold);
    CHECK(fs::exists(path));
    const std::string first = slurp(path);
    CHECK(first.rfind(CacheFile::kVersionLine, 0) == 0);

    GWEngine warm;
    auto warnings = CacheFile::load(path, warm);
    CHECK(warnings.empty());
    CHECK(warm.stats().entries == cold.stats().entries);
    CHECK(warm.nd_plane(4) == value);
    // everything needed was preloaded: no new memo entries were computed
    CHECK(warm.stats().misses == 0);

    const auto path2 = tmp.file("cache2.txt");
    CacheFile::save(path2, warm);
    CHECK(slurp(path2) == first);
}

TEST_CASE("missing cache files are a silent cold start") {
    TempDir tmp;
    GWEngine eng;
    auto warnings = CacheFile::load(tmp.file("absent.txt"), eng);
    CHECK(warnings.empty());
    CHECK(eng.stats().entries == 0);
}

TEST_CASE("corrupt cache lines are skipped with a warning") {
    TempDir tmp;
    const auto path = tmp.file("cache.txt");
    {
        std::ofstream out(path);
        out << CacheFile::kVersionLine << "\n";
        out << "P:2:1:2,2=1\n";
        out << "this is not a cache line\n";
        out << "P:2:1:2,2,xyz=9\n";
        out << "P:3:1:3,3=not-a-number\n";
    }
    GWEngine eng;
    auto warnings = CacheFile::load(path, eng);
    CHECK(warnings.size() == 3);
    CHECK(eng.stats().entries == 1);
    CHECK(eng.primary(2, 1, {2, 2}) == Rational(1));
    CHECK(eng.stats().misses == 0);  // served from the preloaded entry
}

TEST_CASE("a version mismatch refuses the whole file") {
    TempDir tmp;
    const auto path = tmp.file("cache.txt");
    {
        std::ofstream out(path);
        out << "rccount-cache v9\n";
        out << "P:2:1:2,2=1\n";
    }
    GWEngine eng;
    auto warnings = CacheFile::load(path, eng);
    CHECK(warnings.size() == 1);
    CHECK(eng.stats().entries == 0);
}

TEST_CASE("poisoned cache values are detected by the acceptance of keys only") {
    TempDir tmp;
    const auto path = tmp.file("cache.txt");
    {
        // a syntactically valid line with a wrong value is trusted (the cache
        // is authoritative); this documents that the file must not be edited
        std::ofstream out(path);
        out << CacheFile::kVersionLine << "\n";
        out << "P:2:1:2,2=7\n";
    }
    GWEngine eng;
    CHECK(CacheFile::load(path, eng).empty());
    CHECK(eng.primary(2, 1, {2, 2}) == Rational(7));
}

TEST_CASE("cli computes an invariant and reports it") {
    Capture cap;
    int rc = run_cli({"invariant", "--n", "2", "--d", "3", "--insertions",
                      "2,2,2,2,2,2,2,2"});
    CHECK(rc == 0);
    CHECK(cap.out.str().find("count: 12") != std::string::npos);
}

TEST_CASE("cli json output carries the count as a string") {
    Capture cap;
    int rc = run_cli({"invariant", "--n", "2", "--d", "4", "--insertions",
                      "2,2,2,2,2,2,2,2,2,2,2", "--format", "json"});
    CHECK(rc == 0);
    CHECK(cap.out.str().find("\"count\": \"620\"") != std::string::npos);
}

TEST_CASE("cli descendant query") {
    Capture cap;
    int rc = run_cli({"invariant", "--n", "2", "--d", "1", "--psi", "2", "--at", "1"});
    CHECK(rc == 0);
    CHECK(cap.out.str().find("count: -3") != std::string::npos);
}

TEST_CASE("cli singular queries") {
    {
        Capture cap;
        CHECK(run_cli({"singular", "--type", "tacnode", "--n", "2", "--d", "4",
                       "--points", "10"}) == 0);
        CHECK(cap.out.str().find("count: 1296") != std::string::npos);
    }
    {
        Capture cap;
        CHECK(run_cli({"singular", "--type", "cusp", "--n", "4", "--d", "3",
                       "--points", "3", "--planes", "4", "--route", "ordinary"}) == 0);
        CHECK(cap.out.str().find("count: 24") != std::string::npos);
    }
}

TEST_CASE("cli usage errors exit with 2") {
    {
        Capture cap;
        CHECK(run_cli({"frobnicate"}) == 2);
    }
    {
        Capture cap;
        CHECK(run_cli({"invariant", "--n", "2"}) == 2);  // missing --d
    }
    {
        Capture cap;
        CHECK(run_cli({}) == 2);  // a subcommand is required
    }
    {
        Capture cap;
        CHECK(run_cli({"table", "--id", "1", "--format", "yaml"}) == 2);
    }
    {
        Capture cap;
        CHECK(run_cli({"--help"}) == 0);
        CHECK(cap.out.str().find("invariant") != std::string::npos);
    }
}

TEST_CASE("cli range errors exit with 3") {
    {
        Capture cap;
        CHECK(run_cli({"invariant", "--n", "9", "--d", "1"}) == 3);
    }
    {
        Capture cap;
        CHECK(run_cli({"invariant", "--n", "2", "--d", "1", "--insertions", "5"}) == 3);
    }
    {
        Capture cap;
        CHECK(run_cli({"invariant", "--n", "2", "--d", "1", "--insertions", "2;2"}) == 3);
    }
    {
        Capture cap;
        CHECK(run_cli({"singular", "--type", "pentacle", "--n", "2", "--d", "3",
                       "--points", "7"}) == 3);
    }
    {
        Capture cap;  // plane constraints only make sense for cusp queries
        CHECK(run_cli({"singular", "--type", "triple", "--n", "3", "--d", "4",
                       "--points", "3", "--lines", "7", "--planes", "1"}) == 3);
    }
    {
        Capture cap;  // triple points are implemented in P^2 and P^3 only
        CHECK(run_cli({"singular", "--type", "triple", "--n", "4", "--d", "4",
                       "--points", "3", "--lines", "7"}) == 3);
    }
    {
        Capture cap;
        CHECK(run_cli({"table", "--id", "7"}) == 3);
    }
}

TEST_CASE("cli balance errors exit with 4") {
    {
        Capture cap;
        CHECK(run_cli({"singular", "--type", "cusp", "--n", "2", "--d", "3",
                       "--points", "6"}) == 4);
    }
    {
        Capture cap;
        CHECK(run_cli({"singular", "--type", "triple", "--n", "2", "--d", "4",
                       "--points", "9"}) == 4);
    }
    {
        Capture cap;
        CHECK(run_cli({"singular", "--type", "tacnode", "--n", "3", "--d", "4",
                       "--points", "7", "--lines", "0"}) == 4);
    }
}

TEST_CASE("cli writes and reuses the cache file") {
    TempDir tmp;
    const auto path = tmp.file("cli-cache.txt");
    {
        Capture cap;
        CHECK(run_cli({"--cache", path, "invariant", "--n", "2", "--d", "4",
                       "--insertions", "2,2,2,2,2,2,2,2,2,2,2"}) == 0);
    }
    CHECK(fs::exists(path));
    const std::string bytes = slurp(path);
    CHECK(!bytes.empty());
    {
        Capture cap;
        CHECK(run_cli({"--cache", path, "invariant", "--n", "2", "--d", "4",
                       "--insertions", "2,2,2,2,2,2,2,2,2,2,2"}) == 0);
        CHECK(cap.out.str().find("count: 620") != std::string::npos);
        CHECK(cap.err.str().empty());
    }
    CHECK(slurp(path) == bytes);  // warm rerun leaves the cache unchanged

    // environment fallback
    const auto env_path = tmp.file("env-cache.txt");
    ::setenv("RC_COUNT_CACHE", env_path.c_str(), 1);
    {
        Capture cap;
        CHECK(run_cli({"invariant", "--n", "2", "--d", "3", "--insertions",
                       "2,2,2,2,2,2,2,2"}) == 0);
    }
    ::unsetenv("RC_COUNT_CACHE");
    CHECK(fs::exists(env_path));
}

TEST_CASE("cli table command prints and verifies") {
    {
        Capture cap;
        CHECK(run_cli({"table", "--id", "1"}) == 0);
        CHECK(cap.out.str().find("91466185097280") != std::string::npos);
    }
    {
        Capture cap;
        CHECK(run_cli({"table", "--id", "2", "--format", "csv"}) == 0);
        CHECK(cap.out.str().find("d,count") != std::string::npos);
        CHECK(cap.out.str().find("8,287190836432640") != std::string::npos);
    }
    {
        Capture cap;
        CHECK(run_cli({"table", "--id", "5", "--format", "json"}) == 0);
        CHECK(cap.out.str().find("\"count\": \"1680\"") != std::string::npos);
    }
}
