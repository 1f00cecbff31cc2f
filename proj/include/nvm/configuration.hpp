#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nvm {

/// A 0/1 spin assignment on n vertices, bit-packed.  Bit v is the spin at
/// vertex v; for n <= 64 the assignment round-trips through encoding(),
/// which is also the state index used by the exact CTMC engine.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(int n) : n_(n), words_(word_count(n), 0) {}

    static Configuration all_zero(int n) { return Configuration(n); }
    static Configuration all_one(int n);
    /// Character i of `bits` ('0' or '1') is the spin at vertex i.
    static Configuration from_bit_string(std::string_view bits);
    static Configuration from_encoding(int n, std::uint64_t enc);

    int size() const { return n_; }
    bool get(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void set(int v, bool s) {
        std::uint64_t m = 1ull << (v & 63);
        if (s) words_[v >> 6] |= m; else words_[v >> 6] &= ~m;
    }
    void flip(int v) { words_[v >> 6] ^= 1ull << (v & 63); }

    int count_ones() const;
    bool all_zero_bits() const;

    /// State index with bit v = spin(v).  Requires n <= 64.
    std::uint64_t encoding() const;

    Configuration complemented() const;
    Configuration xored(const Configuration& other) const;
    /// Componentwise partial order: this(v) <= other(v) for every v.
    bool leq(const Configuration& other) const;

    std::string to_bit_string() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    static int word_count(int n) { return (n + 63) / 64; }
    void trim_tail_() {
        if (n_ % 64 && !words_.empty()) words_.back() &= (1ull << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_; // unused tail bits kept at 0
};

} // namespace nvm
