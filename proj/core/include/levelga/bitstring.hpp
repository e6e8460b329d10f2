#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace levelga {

/// Fixed-length string over {0,1}. Bit i=0 is the leftmost position; the
/// numeric index used by from_index/to_index treats that position as the most
/// significant digit, so numeric order equals lexicographic order.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t n) : bits_(n, 0) {}
    BitString(std::initializer_list<int> bits);

    static BitString from_string(std::string_view s);
    static BitString from_index(std::uint64_t index, std::size_t n);
    static BitString all_ones(std::size_t n);

    std::uint64_t to_index() const;  // requires size() <= 64

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int get(std::size_t i) const { return bits_[i]; }
    int operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, int v) { bits_[i] = static_cast<std::uint8_t>(v != 0); }
    void flip(std::size_t i) { bits_[i] ^= 1u; }

    std::size_t count_ones() const;
    std::string to_string() const;

    friend std::size_t hamming_distance(const BitString& a, const BitString& b);

    bool operator==(const BitString&) const = default;
    std::strong_ordering operator<=>(const BitString& other) const;

private:
    std::vector<std::uint8_t> bits_;
};

std::size_t hamming_distance(const BitString& a, const BitString& b);

}  // namespace levelga
