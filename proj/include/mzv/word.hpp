#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

enum class Letter : std::uint8_t { x = 0, y = 1 };

/*
 * A word over the alphabet {x, y}, packed one bit per letter (x = 0, y = 1).
 *
 * The first letter occupies the most significant of the `length` low bits, so
 * for words of equal length the packed value orders words lexicographically
 * with x < y. Concatenation is a shift and an or.
 *
 * Words encode MZV indices: (k1, ..., kn) <-> x^{k1-1} y ... x^{kn-1} y.
 */
class Word {
public:
    static constexpr std::size_t max_length = 64;

    constexpr Word() = default;

    /// Throws std::length_error beyond max_length and std::invalid_argument
    /// on bits outside the low `length` positions.
    static Word from_bits(std::uint64_t bits, std::size_t length);
    static Word from_letter(Letter a) { return Word(static_cast<std::uint64_t>(a), 1); }
    /// Parses a string over {x, y}; "1" and "" denote the empty word.
    static Word from_string(std::string_view letters);
    static Word power(Letter a, std::size_t n);

    constexpr std::size_t length() const { return length_; }
    constexpr std::size_t weight() const { return length_; }
    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return length_ == 0; }

    Letter operator[](std::size_t i) const {
        return static_cast<Letter>((bits_ >> (length_ - 1 - i)) & 1u);
    }
    Letter front() const { return (*this)[0]; }
    Letter back() const { return static_cast<Letter>(bits_ & 1u); }

    /// Number of y letters.
    std::size_t depth() const;
    /// Number of adjacent "xy" pairs, i.e. the count of k_i > 1 for admissible words.
    std::size_t height() const;
    /// Empty, or starts with x and ends with y.
    bool admissible() const;

    Word operator*(const Word& rhs) const;
    Word prefix(std::size_t n) const;
    Word suffix(std::size_t n) const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    constexpr Word(std::uint64_t bits, std::size_t length)
        : bits_(bits), length_(static_cast<std::uint8_t>(length)) {}

    std::uint64_t bits_ = 0;
    std::uint8_t length_ = 0;
};

/// Admissible word of an index with k1 >= 2; rejects empty or k1 = 1 input.
Word word_of_composition(const std::vector<int>& ks);
/// Index of a nonempty word ending in y (k1 = 1 is allowed for such words);
/// the empty word maps to the empty index.
std::vector<int> composition_of_word(const Word& w);

/// Accepts "xxyy" style letter strings and "(2,1,2)" style compositions.
Word parse_word(std::string_view text);

std::string composition_str(const std::vector<int>& ks);

/// Admissible words of weight k in term order; exactly 2^{k-2} of them.
std::vector<Word> basis(int k);
/// Position of an admissible weight-k word inside basis(k).
std::size_t basis_index(const Word& w);
std::size_t basis_size(int k);

}  // namespace mzv

template <>
struct std::hash<mzv::Word> {
    std::size_t operator()(const mzv::Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ull + w.length());
    }
};
