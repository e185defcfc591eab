#include "mzv/word.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace mzv {

namespace {

constexpr std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Word Word::from_bits(std::uint64_t bits, std::size_t length) {
    if (length > max_length) throw std::length_error("word longer than 64 letters");
    if ((bits & ~low_mask(length)) != 0) throw std::invalid_argument("word bits exceed length");
    return Word(bits, length);
}

Word Word::from_string(std::string_view letters) {
    letters = trim(letters);
    if (letters == "1") return Word{};
    if (letters.size() > max_length) throw std::length_error("word longer than 64 letters");
    std::uint64_t bits = 0;
    for (char c : letters) {
        bits <<= 1;
        if (c == 'y')
            bits |= 1;
        else if (c != 'x')
            throw std::invalid_argument("word letters must be 'x' or 'y': " + std::string(letters));
    }
    return Word(bits, letters.size());
}

Word Word::power(Letter a, std::size_t n) {
    if (n > max_length) throw std::length_error("word longer than 64 letters");
    return Word(a == Letter::y ? low_mask(n) : 0, n);
}

std::size_t Word::depth() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::size_t Word::height() const {
    // bit i is x and bit i-1 (the next letter) is y
    const std::uint64_t xs = ~bits_ & low_mask(length_);
    return static_cast<std::size_t>(std::popcount((xs >> 1) & bits_));
}

bool Word::admissible() const {
    if (length_ == 0) return true;
    return front() == Letter::x && back() == Letter::y;
}

Word Word::operator*(const Word& rhs) const {
    const std::size_t n = length_ + rhs.length_;
    if (n > max_length) throw std::length_error("word longer than 64 letters");
    const std::uint64_t hi = rhs.length_ >= 64 ? 0 : (bits_ << rhs.length_);
    return Word(hi | rhs.bits_, n);
}

Word Word::prefix(std::size_t n) const {
    if (n > length_) throw std::out_of_range("prefix longer than word");
    return Word(n == 0 ? 0 : bits_ >> (length_ - n), n);
}

Word Word::suffix(std::size_t n) const {
    if (n > length_) throw std::out_of_range("suffix longer than word");
    return Word(bits_ & low_mask(n), n);
}

std::string Word::str() const {
    if (length_ == 0) return "1";
    std::string s(length_, 'x');
    for (std::size_t i = 0; i < length_; ++i)
        if ((*this)[i] == Letter::y) s[i] = 'y';
    return s;
}

Word word_of_composition(const std::vector<int>& ks) {
    if (ks.empty()) throw std::invalid_argument("empty composition");
    if (ks.front() < 2) throw std::invalid_argument("composition must start with k1 >= 2");
    Word w;
    for (int k : ks) {
        if (k < 1) throw std::invalid_argument("composition entries must be positive");
        w = w * Word::power(Letter::x, static_cast<std::size_t>(k - 1)) * Word::from_letter(Letter::y);
    }
    return w;
}

std::vector<int> composition_of_word(const Word& w) {
    std::vector<int> ks;
    if (w.empty()) return ks;
    if (w.back() != Letter::y) throw std::invalid_argument("word does not end in y: " + w.str());
    int run = 1;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (w[i] == Letter::y) {
            ks.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    return ks;
}

Word parse_word(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty word text");
    if (text.front() != '(') return Word::from_string(text);
    if (text.back() != ')') throw std::invalid_argument("unterminated composition: " + std::string(text));
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> ks;
    while (true) {
        const auto comma = body.find(',');
        const std::string_view item = trim(body.substr(0, comma));
        int k = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument("bad composition entry in " + std::string(text));
        ks.push_back(k);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return word_of_composition(ks);
}

std::string composition_str(const std::vector<int>& ks) {
    std::string s = "(";
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ks[i]);
    }
    return s + ")";
}

std::size_t basis_size(int k) {
    if (k < 2) throw std::invalid_argument("basis weight must be >= 2");
    if (k - 2 >= 63) throw std::length_error("basis weight too large");
    return std::size_t{1} << (k - 2);
}

std::vector<Word> basis(int k) {
    const std::size_t n = basis_size(k);
    std::vector<Word> out;
    out.reserve(n);
    const auto len = static_cast<std::size_t>(k);
    for (std::uint64_t interior = 0; interior < n; ++interior)
        out.push_back(Word::from_bits((interior << 1) | 1u, len));
    return out;
}

std::size_t basis_index(const Word& w) {
    if (w.length() < 2 || !w.admissible())
        throw std::invalid_argument("not an admissible word of weight >= 2: " + w.str());
    return static_cast<std::size_t>((w.bits() & low_mask(w.length() - 1)) >> 1);
}

}  // namespace mzv
