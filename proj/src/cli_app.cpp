#include "rcc/cli_app.hpp"

#include "rcc/cache.hpp"
#include "rcc/singular.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>

namespace rcc {

namespace {

using nlohmann::json;

struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ----- reference values the table command checks itself against -----

struct PlanarRow {
    long d;
    const char* triple;
    const char* tacnode;
};
constexpr PlanarRow kPlanarRows[] = {
    {1, "0", "0"},
    {2, "0", "0"},
    {3, "0", "0"},
    {4, "60", "1296"},
    {5, "56400", "499680"},
    {6, "49177440", "271751040"},
    {7, "56784765120", "227509931520"},
    {8, "91466185097280", "287190836432640"},
};

struct SpaceRow {
    long d, p, q;
    const char* triple;
    const char* tacnode;
};
constexpr SpaceRow kSpaceRows[] = {
    {4, 6, 1, "0", "0"},     {4, 5, 3, "0", "0"},
    {4, 4, 5, "0", "0"},     {4, 3, 7, "60", "1296"},
    {4, 2, 9, "1280", "27648"},  {4, 1, 11, "19640", "426672"},
    {5, 8, 1, "8", "960"},   {5, 7, 3, "264", "9792"},
    {5, 6, 5, "4360", "111840"}, {6, 10, 1, "4680", "112320"},
};

struct CuspRow {
    long d, p, q, r;
    const char* count;
};
constexpr CuspRow kCuspRows[] = {
    {3, 4, 0, 1, "0"},  {3, 3, 1, 2, "0"},  {3, 3, 0, 4, "24"},
    {3, 2, 1, 5, "240"}, {4, 6, 0, 0, "0"}, {4, 5, 1, 1, "0"},
    {4, 5, 0, 3, "0"},  {4, 4, 1, 4, "1680"}, {5, 7, 1, 0, "120"},
};

// ----- shared plumbing -----

struct Session {
    GWEngine engine;
    NodeCalculus nodes{engine};
    std::string cache_path;

    explicit Session(const std::string& cli_cache) {
        cache_path = cli_cache;
        if (cache_path.empty()) {
            if (const char* env = std::getenv("RC_COUNT_CACHE")) cache_path = env;
        }
        if (!cache_path.empty())
            for (const auto& w : CacheFile::load(cache_path, engine))
                std::cerr << "warning: " << w << "\n";
    }

    void finish() {
        if (!cache_path.empty()) CacheFile::save(cache_path, engine);
    }
};

ConstraintTuple build_mu(long n, long points, long lines, long planes) {
    if (points < 0 || lines < 0 || planes < 0)
        throw RangeError("constraint counts must be non-negative");
    if (planes > 0 && n < 3)
        throw RangeError("plane constraints need n >= 3");
    ConstraintTuple mu(n);
    for (long i = 0; i < points; ++i) mu.add(n);
    for (long i = 0; i < lines; ++i) mu.add(n - 1);
    for (long i = 0; i < planes; ++i) mu.add(n - 2);
    return mu;
}

void emit_query_output(const std::string& format, const json& query,
                       const Rational& raw, long divisor, const std::string& count,
                       long long ms, const GWEngine::Stats& st) {
    if (format == "json") {
        json out;
        out["query"] = query;
        out["raw"] = raw.to_string();
        out["divisor"] = std::to_string(divisor);
        out["count"] = count;
        out["timing_ms"] = ms;
        out["cache"] = {
            {"hits", st.hits}, {"misses", st.misses}, {"entries", st.entries}};
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "query:";
    for (const auto& [k, v] : query.items()) {
        std::cout << " " << k << "=";
        if (v.is_string())
            std::cout << v.get<std::string>();
        else
            std::cout << v;
    }
    std::cout << "\n";
    std::cout << "raw: " << raw.to_string() << "\n";
    std::cout << "divisor: " << divisor << "\n";
    std::cout << "count: " << count << "\n";
    std::cout << "time: " << ms << " ms\n";
    std::cout << "cache: " << st.hits << " hits, " << st.misses << " misses, "
              << st.entries << " entries\n";
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// ----- subcommands -----

int cmd_invariant(long n, long d, const std::string& insertions_csv, long psi,
                  long at, bool has_psi, const std::string& format,
                  const std::string& cache) {
    if (n < 1 || n > 6) throw RangeError("invariant: supported range is 1 <= n <= 6");
    if (d < 0) throw RangeError("invariant: need d >= 0");

    std::vector<long> codims;
    if (!insertions_csv.empty()) {
        std::istringstream is(insertions_csv);
        std::string item;
        while (std::getline(is, item, ',')) {
            try {
                size_t pos = 0;
                long v = std::stol(item, &pos);
                if (pos != item.size()) throw std::invalid_argument(item);
                codims.push_back(v);
            } catch (const std::exception&) {
                throw RangeError("invariant: bad insertion '" + item + "'");
            }
        }
    }
    for (long c : codims)
        if (c < 0 || c > n) throw RangeError("invariant: insertion codim outside [0, n]");
    if (has_psi && (psi < 0 || at < 0 || at > n))
        throw RangeError("invariant: need psi >= 0 and 0 <= at <= n");

    Session s(cache);
    const auto t0 = std::chrono::steady_clock::now();
    Rational value = has_psi ? s.engine.descendant(n, d, psi, at, codims)
                             : s.engine.primary(n, d, codims);
    const auto ms = ms_since(t0);
    s.finish();

    json query = {{"command", "invariant"}, {"n", n}, {"d", d},
                  {"insertions", insertions_csv}};
    if (has_psi) {
        query["psi"] = psi;
        query["at"] = at;
    }
    emit_query_output(format, query, value, 1, value.to_string(), ms,
                      s.engine.stats());
    return 0;
}

int cmd_singular(const std::string& type, long n, long d, long points, long lines,
                 long planes, bool points_given, const std::string& route,
                 const std::string& format, const std::string& cache) {
    if (d < 1) throw RangeError("singular: need d >= 1");

    // in the plane the triple-point and tacnode queries have a unique
    // balanced constraint set, so --points may be omitted
    if (n == 2 && (type == "triple" || type == "tacnode") && !points_given &&
        lines == 0 && planes == 0)
        points = 3 * d - 2;

    Session s(cache);
    const auto t0 = std::chrono::steady_clock::now();
    CountResult res;

    if (type == "cusp") {
        if (n < 2 || n > 4)
            throw RangeError("singular: cusp counts are supported for 2 <= n <= 4");
        CuspClasses cls = CuspClasses::Modified;
        if (route == "ordinary")
            cls = CuspClasses::Ordinary;
        else if (route != "modified")
            throw RangeError("singular: route must be modified or ordinary");
        res = cusp_count(s.nodes, n, d, build_mu(n, points, lines, planes), cls);
    } else if (type == "triple" || type == "tacnode") {
        const bool triple = type == "triple";
        if (planes != 0)
            throw RangeError("singular: plane constraints only apply to cusp counts");
        if (n == 2) {
            if (points != 3 * d - 2 || lines != 0) {
                std::ostringstream os;
                os << "singular: in the plane the " << type
                   << " count needs points == 3d-2 == " << 3 * d - 2
                   << " and lines == 0 (got points=" << points
                   << ", lines=" << lines << ")";
                throw BalanceError(os.str());
            }
            res = triple ? planar_triple_point(s.nodes, d) : planar_tacnode(s.nodes, d);
        } else if (n == 3) {
            res = triple ? space_triple_point(s.nodes, d, points, lines)
                         : space_tacnode(s.nodes, d, points, lines);
        } else {
            throw RangeError("singular: " + type + " counts are supported for n = 2, 3");
        }
    } else {
        throw RangeError("singular: type must be cusp, triple or tacnode");
    }

    const auto ms = ms_since(t0);
    s.finish();

    json query = {{"command", "singular"}, {"type", type}, {"n", n}, {"d", d},
                  {"points", points}, {"lines", lines}, {"planes", planes}};
    if (type == "cusp") query["route"] = route;
    emit_query_output(format, query, res.raw, res.divisor, res.count.get_str(), ms,
                      s.engine.stats());
    return 0;
}

int cmd_table(long id, const std::string& format, const std::string& cache) {
    if (id < 1 || id > 5) throw RangeError("table: id must be between 1 and 5");

    Session s(cache);
    struct Cell {
        json query;
        std::string computed;
        std::string expected;
        std::string label;
    };
    std::vector<Cell> cells;

    auto planar_label = [](long d) {
        std::ostringstream os;
        os << "d=" << d;
        return os.str();
    };

    if (id == 1 || id == 2) {
        for (const auto& row : kPlanarRows) {
            CountResult r = (id == 1) ? planar_triple_point(s.nodes, row.d)
                                      : planar_tacnode(s.nodes, row.d);
            cells.push_back({{{"d", row.d}},
                             r.count.get_str(),
                             id == 1 ? row.triple : row.tacnode,
                             planar_label(row.d)});
        }
    } else if (id == 3 || id == 4) {
        for (const auto& row : kSpaceRows) {
            CountResult r = (id == 3) ? space_triple_point(s.nodes, row.d, row.p, row.q)
                                      : space_tacnode(s.nodes, row.d, row.p, row.q);
            std::ostringstream os;
            os << "d=" << row.d << " points=" << row.p << " lines=" << row.q;
            cells.push_back({{{"d", row.d}, {"points", row.p}, {"lines", row.q}},
                             r.count.get_str(),
                             id == 3 ? row.triple : row.tacnode,
                             os.str()});
        }
    } else {
        for (const auto& row : kCuspRows) {
            CountResult r =
                cusp_count(s.nodes, 4, row.d, build_mu(4, row.p, row.q, row.r));
            std::ostringstream os;
            os << "d=" << row.d << " points=" << row.p << " lines=" << row.q
               << " planes=" << row.r;
            cells.push_back({{{"d", row.d}, {"points", row.p}, {"lines", row.q},
                              {"planes", row.r}},
                             r.count.get_str(),
                             row.count,
                             os.str()});
        }
    }
    s.finish();

    if (format == "json") {
        json out = json::array();
        for (const auto& c : cells) {
            json j = c.query;
            j["count"] = c.computed;
            out.push_back(j);
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        bool with_pq = id >= 3, with_r = id == 5;
        std::cout << "d" << (with_pq ? ",points,lines" : "") << (with_r ? ",planes" : "")
                  << ",count\n";
        for (const auto& c : cells) {
            std::cout << c.query["d"];
            if (with_pq) std::cout << "," << c.query["points"] << "," << c.query["lines"];
            if (with_r) std::cout << "," << c.query["planes"];
            std::cout << "," << c.computed << "\n";
        }
    } else {
        for (const auto& c : cells)
            std::cout << c.label << "  ->  " << c.computed << "\n";
    }

    for (const auto& c : cells) {
        if (c.computed != c.expected) {
            std::cerr << "table " << id << " mismatch at " << c.label << ": computed "
                      << c.computed << ", expected " << c.expected << "\n";
            return 5;
        }
    }
    return 0;
}

int cmd_selftest(const std::string& level) {
    if (level != "quick" && level != "full")
        throw RangeError("selftest: level must be quick or full");

    int failures = 0;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    GWEngine eng;
    NodeCalculus nodes(eng);

    {
        const char* expect[] = {"1", "1", "12", "620"};
        bool ok = true;
        std::string got;
        for (long d = 1; d <= 4; ++d) {
            got = eng.nd_plane(d).to_string();
            if (got != expect[d - 1]) {
                ok = false;
                break;
            }
        }
        check("plane curve counts d=1..4", ok, "got " + got);
    }
    {
        bool ok = eng.descendant(2, 1, 1, 2, {}) == Rational(1) &&
                  eng.descendant(2, 1, 2, 1, {}) == Rational(-3) &&
                  eng.descendant(2, 1, 3, 0, {}) == Rational(6);
        check("one-point descendants match the closed series", ok);
    }
    {
        ConstraintTuple two_pts(2, {2, 2});
        ConstraintTuple one_pt(2, {2});
        bool ok = nodes.modified_descendant(2, 1, 0, 1, 0, two_pts) == Rational(-2) &&
                  nodes.modified_descendant(2, 1, 0, 2, 0, one_pt) == Rational(0);
        check("forgetful cotangent micro-values", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& row : kPlanarRows) {
            if (level == "quick" && row.d > 5) break;
            auto t = planar_triple_point(nodes, row.d);
            auto k = planar_tacnode(nodes, row.d);
            if (t.count.get_str() != row.triple || k.count.get_str() != row.tacnode) {
                ok = false;
                detail = "d=" + std::to_string(row.d);
                break;
            }
        }
        check("plane triple/tacnode counts", ok, detail);
    }
    {
        auto r = cusp_count(nodes, 4, 3, build_mu(4, 3, 0, 4));
        check("cusped space cubics through 3 points and 4 planes",
              r.count.get_str() == "24", "got " + r.count.get_str());
    }
    {
        bool ok = true;
        for (long p = 0; p <= 2 && ok; ++p) {
            const long q = 5 - 2 * p;
            ok = cusp_node_pair(nodes, 2, p, q).is_zero() &&
                 two_nodal_attached(nodes, 2, p, q).is_zero() &&
                 split_pair_a(nodes, 2, p, q).is_zero() &&
                 split_pair_eta(nodes, 2, p, q).is_zero();
        }
        check("degree-two bracket combinations cancel in space", ok);
    }

    if (level == "full") {
        {
            bool ok = true;
            std::string detail;
            for (const auto& row : kSpaceRows) {
                auto t = space_triple_point(nodes, row.d, row.p, row.q);
                auto k = space_tacnode(nodes, row.d, row.p, row.q);
                if (t.count.get_str() != row.triple || k.count.get_str() != row.tacnode) {
                    ok = false;
                    detail = "d=" + std::to_string(row.d);
                    break;
                }
            }
            check("space triple/tacnode counts", ok, detail);
        }
        {
            bool ok = true;
            std::string detail;
            for (const auto& row : kCuspRows) {
                auto r = cusp_count(nodes, 4, row.d, build_mu(4, row.p, row.q, row.r));
                if (r.count.get_str() != row.count) {
                    ok = false;
                    detail = "d=" + std::to_string(row.d);
                    break;
                }
            }
            check("cusp counts in P4", ok, detail);
        }
        {
            bool ok = true;
            for (long d = 1; d <= 4 && ok; ++d) {
                ConstraintTuple mu(2, std::vector<long>(static_cast<size_t>(3 * d - 2), 2));
                ok = cusp_raw(nodes, 2, d, mu, CuspClasses::Modified) ==
                     cusp_raw(nodes, 2, d, mu, CuspClasses::Ordinary);
            }
            check("both cusp class conventions agree in the plane", ok);
        }
        {
            bool ok = space_triple_point(nodes, 4, 3, 7).count ==
                          planar_triple_point(nodes, 4).count &&
                      space_tacnode(nodes, 4, 3, 7).count ==
                          planar_tacnode(nodes, 4).count;
            check("three points and seven lines trace the planar quartic counts", ok);
        }
    }

    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact counts of singular rational curves in projective space"};
    app.require_subcommand(1);

    std::string cache;
    app.add_option("--cache", cache,
                   "cache file for computed invariants (default: $RC_COUNT_CACHE)");

    auto* inv = app.add_subcommand("invariant", "one Gromov-Witten number");
    long inv_n = 0, inv_d = 0, inv_psi = 0, inv_at = 0;
    std::string inv_ins, inv_format = "text";
    inv->add_option("--n", inv_n, "ambient projective space P^n")->required();
    inv->add_option("--d", inv_d, "curve degree")->required();
    inv->add_option("--insertions", inv_ins, "comma-separated incidence codims");
    auto* psi_opt = inv->add_option("--psi", inv_psi, "cotangent power at one point");
    inv->add_option("--at", inv_at, "codim carried by the cotangent point")
        ->needs(psi_opt);
    inv->add_option("--format", inv_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* sing = app.add_subcommand("singular", "count curves with one singularity");
    std::string sing_type, sing_route = "modified", sing_format = "text";
    long sing_n = 0, sing_d = 0, sing_p = 0, sing_q = 0, sing_r = 0;
    sing->add_option("--type", sing_type, "cusp, triple or tacnode")->required();
    sing->add_option("--n", sing_n, "ambient projective space P^n")->required();
    sing->add_option("--d", sing_d, "curve degree")->required();
    auto* points_opt =
        sing->add_option("--points", sing_p, "number of general point constraints");
    sing->add_option("--lines", sing_q, "number of general line constraints");
    sing->add_option("--planes", sing_r, "number of general plane constraints");
    sing->add_option("--route", sing_route,
                     "cusp evaluation in modified or ordinary classes");
    sing->add_option("--format", sing_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* tab = app.add_subcommand("table", "print a reference table and verify it");
    long tab_id = 0;
    std::string tab_format = "text";
    tab->add_option("--id", tab_id, "table number 1..5")->required();
    tab->add_option("--format", tab_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* st = app.add_subcommand("selftest", "run built-in consistency checks");
    std::string st_level = "quick";
    st->add_option("--level", st_level, "quick or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (inv->parsed())
            return cmd_invariant(inv_n, inv_d, inv_ins, inv_psi, inv_at,
                                 psi_opt->count() > 0, inv_format, cache);
        if (sing->parsed())
            return cmd_singular(sing_type, sing_n, sing_d, sing_p, sing_q, sing_r,
                                points_opt->count() > 0, sing_route, sing_format,
                                cache);
        if (tab->parsed()) return cmd_table(tab_id, tab_format, cache);
        if (st->parsed()) return cmd_selftest(st_level);
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BalanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("rccount");
    for (const auto& a : args) storage.push_back(a);
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const auto& s : storage) argv.push_back(s.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace rcc
