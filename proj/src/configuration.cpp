#include "nvm/configuration.hpp"

#include <bit>

#include "nvm/errors.hpp"

namespace nvm {

Configuration Configuration::all_one(int n) {
    Configuration c(n);
    for (std::size_t w = 0; w < c.words_.size(); ++w) c.words_[w] = ~0ull;
    c.trim_tail_();
    return c;
}

Configuration Configuration::from_bit_string(std::string_view bits) {
    Configuration c(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') c.set(static_cast<int>(i), true);
        else if (bits[i] != '0')
            throw input_error("configuration bit string must contain only 0/1, got '" +
                              std::string(1, bits[i]) + "'");
    }
    return c;
}

Configuration Configuration::from_encoding(int n, std::uint64_t enc) {
    if (n > 64) throw input_error("state encoding limited to 64 vertices");
    Configuration c(n);
    if (n > 0) c.words_[0] = n == 64 ? enc : (enc & ((1ull << n) - 1));
    return c;
}

int Configuration::count_ones() const {
    int k = 0;
    for (auto w : words_) k += std::popcount(w);
    return k;
}

bool Configuration::all_zero_bits() const {
    for (auto w : words_) if (w != 0) return false;
    return true;
}

std::uint64_t Configuration::encoding() const {
    if (n_ > 64) throw input_error("state encoding limited to 64 vertices");
    return words_.empty() ? 0 : words_[0];
}

Configuration Configuration::complemented() const {
    Configuration c = *this;
    for (auto& w : c.words_) w = ~w;
    c.trim_tail_();
    return c;
}

Configuration Configuration::xored(const Configuration& other) const {
    Configuration c = *this;
    for (std::size_t w = 0; w < c.words_.size(); ++w) c.words_[w] ^= other.words_[w];
    return c;
}

bool Configuration::leq(const Configuration& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

std::string Configuration::to_bit_string() const {
    std::string s(n_, '0');
    for (int v = 0; v < n_; ++v) if (get(v)) s[v] = '1';
    return s;
}

} // namespace nvm
