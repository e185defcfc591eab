#include "mzv/poly.hpp"

#include <algorithm>

namespace mzv {

Poly::Poly(const Word& w, const Rat& c) {
    if (!c.is_zero()) terms_.emplace(w, c);
}

Poly::Poly(const Rat& scalar) {
    if (!scalar.is_zero()) terms_.emplace(Word{}, scalar);
}

Rat Poly::coeff(const Word& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Word& w, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool Poly::is_homogeneous(std::size_t k) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [k](const auto& t) { return t.first.weight() == k; });
}

bool Poly::in_h0() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.admissible(); });
}

std::size_t Poly::max_weight() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

std::size_t Poly::min_weight() const {
    return terms_.empty() ? 0 : terms_.begin()->first.weight();
}

Poly Poly::homogeneous_part(std::size_t k) const {
    Poly out;
    for (const auto& [w, c] : terms_)
        if (w.weight() == k) out.terms_.emplace_hint(out.terms_.end(), w, c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, a] : terms_) a *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [w, a] : out.terms_) a = -a;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) out.add_term(u * v, c * d);
    return out;
}

Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly pow(const Poly& p, std::size_t n) {
    Poly out = Poly::one();
    for (std::size_t i = 0; i < n; ++i) out = out * p;
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        const Rat mag = neg ? -c : c;
        if (mag != Rat(1)) {
            s += mag.str();
            if (!w.empty()) s += "*";
        }
        if (!w.empty() || mag == Rat(1)) s += w.str();
    }
    return s;
}

}  // namespace mzv
