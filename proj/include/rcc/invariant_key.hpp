#pragma once

// Canonical identity of a genus-zero invariant of P^n, used as memo-table and
// cache-file key. Two spellings:
//   P:<n>:<d>:<a1>,<a2>,...            plain incidence insertions
//   D:<n>:<d>:<j>:<c>:<a1>,<a2>,...    one psi^j insertion on H^c, the rest plain
// Insertion codims are stored sorted ascending, so equal invariants always
// produce byte-identical keys. At most one psi insertion by construction.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcc {

struct InvariantKey {
    long n = 0;
    long d = 0;
    bool has_psi = false;
    long psi_j = 0;
    long psi_c = 0;
    std::vector<long> codims;  // companions only; sorted

    static InvariantKey primary(long n, long d, std::vector<long> codims) {
        InvariantKey k;
        k.n = n;
        k.d = d;
        k.codims = std::move(codims);
        std::sort(k.codims.begin(), k.codims.end());
        return k;
    }

    static InvariantKey descendant(long n, long d, long j, long c,
                                   std::vector<long> codims) {
        InvariantKey k = primary(n, d, std::move(codims));
        k.has_psi = true;
        k.psi_j = j;
        k.psi_c = c;
        return k;
    }

    std::string to_string() const {
        std::ostringstream os;
        if (has_psi)
            os << "D:" << n << ":" << d << ":" << psi_j << ":" << psi_c << ":";
        else
            os << "P:" << n << ":" << d << ":";
        for (size_t i = 0; i < codims.size(); ++i) {
            if (i) os << ",";
            os << codims[i];
        }
        return os.str();
    }

    static InvariantKey parse(const std::string& s) {
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : s) {
            if (ch == ':') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        fields.push_back(cur);

        auto to_long = [&](const std::string& f) {
            size_t pos = 0;
            long v = std::stol(f, &pos);
            if (pos != f.size()) throw std::invalid_argument("InvariantKey: bad field in " + s);
            return v;
        };
        auto parse_codims = [&](const std::string& f) {
            std::vector<long> cs;
            if (f.empty()) return cs;
            std::string item;
            std::istringstream is(f);
            while (std::getline(is, item, ',')) cs.push_back(to_long(item));
            return cs;
        };

        if (fields.size() == 4 && fields[0] == "P")
            return primary(to_long(fields[1]), to_long(fields[2]), parse_codims(fields[3]));
        if (fields.size() == 6 && fields[0] == "D")
            return descendant(to_long(fields[1]), to_long(fields[2]), to_long(fields[3]),
                              to_long(fields[4]), parse_codims(fields[5]));
        throw std::invalid_argument("InvariantKey: cannot parse '" + s + "'");
    }

    friend bool operator==(const InvariantKey& a, const InvariantKey& b) {
        return a.n == b.n && a.d == b.d && a.has_psi == b.has_psi &&
               a.psi_j == b.psi_j && a.psi_c == b.psi_c && a.codims == b.codims;
    }
};

}  // namespace rcc
