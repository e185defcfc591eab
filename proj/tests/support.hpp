#pragma once

// Test-only helpers: seeded generators and independent string-based oracles.
// Nothing here calls into the packed-word operators it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mzv/poly.hpp"
#include "mzv/word.hpp"

namespace mzv::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20170224);
    return engine;
}

inline Word random_word(std::size_t max_len, std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    const std::size_t n = len(rng());
    const std::uint64_t mask = n >= 64 ? ~0ull : ((1ull << n) - 1);
    return Word::from_bits(rng()() & mask, n);
}

inline Word random_admissible(std::size_t k) {
    const std::uint64_t interior = k > 2 ? rng()() & ((1ull << (k - 2)) - 1) : 0;
    return Word::from_bits((interior << 1) | 1u, k);
}

inline Poly random_poly(std::size_t max_len, std::size_t max_terms = 6) {
    std::uniform_int_distribution<int> terms(0, static_cast<int>(max_terms));
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    Poly p;
    for (int i = terms(rng()); i > 0; --i) p.add_term(random_word(max_len), Rat(num(rng()), den(rng())));
    return p;
}

/// Canonical-form audit: no zero coefficient, strictly increasing term order.
inline bool canonical(const Poly& p) {
    const Word* prev = nullptr;
    for (const auto& [w, c] : p.terms()) {
        if (c.is_zero()) return false;
        if (prev && !(*prev < w)) return false;
        prev = &w;
    }
    return true;
}

/// All words over {x, y} with exactly n letters, as strings.
inline std::vector<std::string> all_strings(std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& s : out) {
            next.push_back(s + "x");
            next.push_back(s + "y");
        }
        out = std::move(next);
    }
    return out;
}

inline std::vector<Word> all_words(std::size_t n) {
    std::vector<Word> out;
    for (const auto& s : all_strings(n)) out.push_back(Word::from_string(s.empty() ? "1" : s));
    return out;
}

inline std::vector<Word> words_up_to(std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t n = 0; n <= max_len; ++n)
        for (const Word& w : all_words(n)) out.push_back(w);
    return out;
}

using StringPoly = std::map<std::string, long long>;

inline std::string tau_oracle(const std::string& w) {
    std::string r(w.rbegin(), w.rend());
    for (char& c : r) c = c == 'x' ? 'y' : 'x';
    return r;
}

/// d_n on one word by literal Leibniz expansion over strings.
inline StringPoly partial_oracle(int n, const std::string& w) {
    StringPoly out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const long long sign = w[i] == 'x' ? 1 : -1;
        for (const auto& v : all_strings(static_cast<std::size_t>(n - 1)))
            out[w.substr(0, i) + "x" + v + "y" + w.substr(i + 1)] += sign;
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
}

inline Poly to_poly(const StringPoly& sp) {
    Poly p;
    for (const auto& [s, c] : sp) p.add_term(Word::from_string(s.empty() ? "1" : s), Rat(static_cast<long>(c)));
    return p;
}

/// Dense rank by plain rational Gauss-Jordan elimination.
inline std::size_t dense_rank_oracle(int k, const std::vector<Poly>& rows) {
    const std::vector<Word> cols = basis(k);
    std::vector<std::vector<Rat>> m;
    for (const Poly& p : rows) {
        std::vector<Rat> r;
        for (const Word& w : cols) r.push_back(p.coeff(w));
        m.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            const Rat f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols.size(); ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Number of weight-k admissible words fixed by tau, by string enumeration.
inline std::size_t self_dual_count_oracle(int k) {
    std::size_t f = 0;
    for (const auto& s : all_strings(static_cast<std::size_t>(k)))
        if (s.front() == 'x' && s.back() == 'y' && tau_oracle(s) == s) ++f;
    return f;
}

}  // namespace mzv::test
