// rtable.hpp
// Precomputed table of provably prime R values in geometric size classes
// (ratio ~1.25), five primes per class. Replaces an external precompute
// script; the loader re-proves every entry so the file needs no trust.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace oppermann {

class table_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RClass {
    std::array<uint64_t, 5> primes{};  // ascending, distinct
};

struct RTable {
    std::vector<RClass> classes;  // ascending by smallest entry
    bool operator==(const RTable&) const = default;
};

// Classes at magnitudes floor(min*1.25^k) up to max (consecutive duplicate
// magnitudes collapse); each class holds the 5 smallest primes >= its
// magnitude, proven by deterministic_prime. Throws std::invalid_argument
// unless 2 <= min < max.
RTable generate_rtable(uint64_t min_magnitude, uint64_t max_magnitude);

// fallback_index-th prime (0..4) of the first class whose smallest entry
// exceeds threshold. Throws table_exhausted when no class qualifies,
// std::invalid_argument for fallback_index > 4.
uint64_t select_r(const RTable& table, uint64_t threshold, unsigned fallback_index);

// Line-oriented text, one entry per line: "<class-index> <decimal prime>".
void store_rtable(const RTable& table, std::ostream& out);
void store_rtable_file(const RTable& table, const std::string& path);

// Parses and validates: consecutive class indexes, exactly 5 ascending
// distinct entries per class, classes ascending, every entry re-proven
// prime. Throws std::runtime_error on any violation.
RTable load_rtable(std::istream& in);
RTable load_rtable_file(const std::string& path);

// FNV-1a over the canonical serialization; echoed in report headers.
uint64_t rtable_fingerprint(const RTable& table);

}  // namespace oppermann
