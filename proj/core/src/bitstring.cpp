#include "levelga/bitstring.hpp"

#include <stdexcept>

namespace levelga {

BitString::BitString(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) bits_.push_back(static_cast<std::uint8_t>(b != 0));
}

BitString BitString::from_string(std::string_view s) {
    BitString x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            x.bits_[i] = 1;
        } else if (s[i] != '0') {
            throw std::invalid_argument("BitString::from_string: expected only '0'/'1'");
        }
    }
    return x;
}

BitString BitString::from_index(std::uint64_t index, std::size_t n) {
    if (n > 64) throw std::invalid_argument("BitString::from_index: n > 64");
    if (n < 64 && (index >> n) != 0)
        throw std::invalid_argument("BitString::from_index: index out of range");
    BitString x(n);
    for (std::size_t i = 0; i < n; ++i)
        x.bits_[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1u);
    return x;
}

BitString BitString::all_ones(std::size_t n) {
    BitString x(n);
    for (auto& b : x.bits_) b = 1;
    return x;
}

std::uint64_t BitString::to_index() const {
    if (size() > 64) throw std::logic_error("BitString::to_index: size() > 64");
    std::uint64_t v = 0;
    for (std::uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

std::size_t BitString::count_ones() const {
    std::size_t c = 0;
    for (std::uint8_t b : bits_) c += b;
    return c;
}

std::string BitString::to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

std::strong_ordering BitString::operator<=>(const BitString& other) const {
    std::size_t n = std::min(size(), other.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = bits_[i] <=> other.bits_[i]; c != 0) return c;
    }
    return size() <=> other.size();
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: dimension mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a.bits_[i] != b.bits_[i];
    return d;
}

}  // namespace levelga
