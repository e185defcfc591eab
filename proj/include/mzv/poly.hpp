#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "mzv/rational.hpp"
#include "mzv/word.hpp"

namespace mzv {

/*
 * Element of the free algebra Q<x, y>: a finite linear combination of words.
 *
 * Terms are kept in word term order (length, then packed bits) and no zero
 * coefficient is ever stored, so structural equality is algebraic equality.
 */
class Poly {
public:
    using Terms = std::map<Word, Rat>;

    Poly() = default;
    Poly(const Word& w) { terms_.emplace(w, Rat(1)); }  // NOLINT(google-explicit-constructor)
    Poly(const Word& w, const Rat& c);
    explicit Poly(const Rat& scalar);

    static Poly one() { return Poly(Word{}); }
    static Poly letter(Letter a) { return Poly(Word::from_letter(a)); }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Word& w) const;

    void add_term(const Word& w, const Rat& c);

    bool is_homogeneous(std::size_t k) const;
    /// Every stored word is admissible (lies in Q + x h y).
    bool in_h0() const;
    /// Largest stored weight; 0 for the zero polynomial.
    std::size_t max_weight() const;
    std::size_t min_weight() const;
    Poly homogeneous_part(std::size_t k) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    /// Concatenation product, extended bilinearly.
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const;

private:
    Terms terms_;
};

Poly pow(const Poly& p, std::size_t n);
Poly mul(const Poly& p, const Poly& q);

}  // namespace mzv
