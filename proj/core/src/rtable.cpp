#include "oppermann/rtable.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "oppermann/arith.hpp"

namespace oppermann {

namespace {

RClass class_at(uint64_t magnitude) {
    RClass cls;
    uint64_t c = magnitude < 2 ? 2 : magnitude;
    for (int k = 0; k < 5;) {
        if (deterministic_prime(c)) cls.primes[size_t(k++)] = c;
        if (c == std::numeric_limits<uint64_t>::max())
            throw std::runtime_error("generate_rtable: class overflows 64 bits");
        ++c;
    }
    return cls;
}

}  // namespace

RTable generate_rtable(uint64_t min_magnitude, uint64_t max_magnitude) {
    if (min_magnitude < 2 || min_magnitude >= max_magnitude)
        throw std::invalid_argument("generate_rtable: need 2 <= min < max");
    RTable table;
    // 80-bit long double keeps u64 magnitudes exact; floor of min*1.25^k.
    long double mag = (long double)min_magnitude;
    uint64_t prev = 0;
    bool first = true;
    while (true) {
        uint64_t m = (uint64_t)std::floor(mag);
        if (m > max_magnitude) break;
        if (first || m != prev) {
            table.classes.push_back(class_at(m));
            prev = m;
            first = false;
        }
        mag *= 1.25L;
    }
    return table;
}

uint64_t select_r(const RTable& table, uint64_t threshold, unsigned fallback_index) {
    if (fallback_index > 4)
        throw std::invalid_argument("select_r: fallback_index out of 0..4");
    for (const RClass& cls : table.classes) {
        if (cls.primes[0] > threshold) return cls.primes[fallback_index];
    }
    throw table_exhausted("select_r: no class above threshold " + std::to_string(threshold) +
                          "; regenerate a larger table");
}

void store_rtable(const RTable& table, std::ostream& out) {
    for (size_t i = 0; i < table.classes.size(); ++i) {
        for (uint64_t p : table.classes[i].primes)
            out << i << ' ' << p << '\n';
    }
}

void store_rtable_file(const RTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("store_rtable: cannot open " + path);
    store_rtable(table, out);
    out.flush();
    if (!out) throw std::runtime_error("store_rtable: write failed for " + path);
}

RTable load_rtable(std::istream& in) {
    RTable table;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        size_t idx;
        uint64_t p;
        std::string extra;
        if (!(ls >> idx >> p) || (ls >> extra))
            throw std::runtime_error("load_rtable: malformed line " + std::to_string(lineno));
        if (idx == table.classes.size()) table.classes.emplace_back();
        if (idx != table.classes.size() - 1)
            throw std::runtime_error("load_rtable: class index out of order at line " +
                                     std::to_string(lineno));
        RClass& cls = table.classes.back();
        size_t filled = 0;
        while (filled < 5 && cls.primes[filled] != 0) ++filled;
        if (filled == 5)
            throw std::runtime_error("load_rtable: more than 5 entries in class " +
                                     std::to_string(idx));
        if (filled > 0 && cls.primes[filled - 1] >= p)
            throw std::runtime_error("load_rtable: entries not ascending in class " +
                                     std::to_string(idx));
        if (!deterministic_prime(p))
            throw std::runtime_error("load_rtable: composite entry " + std::to_string(p) +
                                     " at line " + std::to_string(lineno));
        cls.primes[filled] = p;
    }
    if (table.classes.empty()) throw std::runtime_error("load_rtable: empty table");
    for (size_t i = 0; i < table.classes.size(); ++i) {
        if (table.classes[i].primes[4] == 0)
            throw std::runtime_error("load_rtable: class " + std::to_string(i) +
                                     " has fewer than 5 entries");
        if (i > 0 && table.classes[i - 1].primes[0] > table.classes[i].primes[0])
            throw std::runtime_error("load_rtable: classes not ascending");
    }
    return table;
}

RTable load_rtable_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_rtable: cannot open " + path);
    return load_rtable(in);
}

uint64_t rtable_fingerprint(const RTable& table) {
    std::ostringstream os;
    store_rtable(table, os);
    uint64_t h = 14695981039346656037ULL;
    for (char c : os.str()) {
        h ^= (unsigned char)c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace oppermann
