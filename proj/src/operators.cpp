#include "mzv/operators.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mzv {

Word tau(const Word& w) {
    // reversing the bit string and complementing it swaps x <-> y in reverse order
    std::uint64_t out = 0;
    const std::uint64_t b = w.bits();
    for (std::size_t i = 0; i < w.length(); ++i) out = (out << 1) | (((b >> i) & 1u) ^ 1u);
    return Word::from_bits(out, w.length());
}

Poly tau(const Poly& p) {
    Poly out;
    for (const auto& [w, c] : p.terms()) out.add_term(tau(w), c);
    return out;
}

Poly one_minus_tau(const Poly& p) { return p - tau(p); }

const Poly& partial_of_x(int n) {
    if (n < 1) throw std::invalid_argument("derivation index must be >= 1");
    static std::mutex mu;
    static std::vector<std::unique_ptr<const Poly>> cache;
    std::lock_guard lock(mu);
    const auto idx = static_cast<std::size_t>(n);
    if (cache.size() <= idx) cache.resize(idx + 1);
    if (!cache[idx]) {
        const Poly x = Poly::letter(Letter::x), y = Poly::letter(Letter::y);
        cache[idx] = std::make_unique<const Poly>(x * pow(x + y, idx - 1) * y);
    }
    return *cache[idx];
}

namespace {

void accumulate_partial(const Poly& dx, const Word& w, const Rat& c, Poly& out) {
    const std::size_t m = w.length();
    const Rat neg = -c;
    for (std::size_t i = 0; i < m; ++i) {
        const Word head = w.prefix(i);
        const Word tail = w.suffix(m - i - 1);
        const Rat& sign = w[i] == Letter::x ? c : neg;
        for (const auto& [d, a] : dx.terms()) out.add_term(head * d * tail, a * sign);
    }
}

}  // namespace

Poly partial(int n, const Poly& p) {
    const Poly& dx = partial_of_x(n);
    Poly out;
    for (const auto& [w, c] : p.terms()) accumulate_partial(dx, w, c, out);
    return out;
}

Poly partial(int n, const Word& w) { return partial(n, Poly(w)); }

namespace {

// Parts are chosen nonincreasing; each prefix of a partition shares its
// partially differentiated polynomial with all its extensions. Every node of
// the walk is a partition of `total` and contributes current / z_lambda.
void theta_partitions(int total, int lmax, int last_part, int run, const mpz_class& z,
                      const Poly& current, std::vector<Poly>& out) {
    out[static_cast<std::size_t>(total)] += current * Rat(mpz_class(1), z);
    const int max_part = std::min(lmax - total, last_part);
    for (int j = max_part; j >= 1; --j) {
        const int next_run = j == last_part ? run + 1 : 1;
        const Poly next = partial(j, current);
        if (next.is_zero()) continue;
        theta_partitions(total + j, lmax, j, next_run, z * j * next_run, next, out);
    }
}

}  // namespace

std::vector<Poly> theta_up_to(int lmax, const Poly& p) {
    if (lmax < 0) throw std::invalid_argument("theta degree must be >= 0");
    std::vector<Poly> out(static_cast<std::size_t>(lmax) + 1);
    if (p.is_zero()) return out;
    theta_partitions(0, lmax, lmax, 0, mpz_class(1), p, out);
    return out;
}

Poly theta(int l, const Poly& p) {
    if (l < 0) throw std::invalid_argument("theta degree must be >= 0");
    if (l == 0) return p;
    if (p.is_zero()) return Poly{};
    return theta_up_to(l, p)[static_cast<std::size_t>(l)];
}

Poly UPoly::coeff(int j) const {
    const auto it = coeffs_.find(j);
    return it == coeffs_.end() ? Poly{} : it->second;
}

void UPoly::add(int j, const Poly& p) {
    if (j < 0) throw std::invalid_argument("negative u-power");
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(j, p);
    if (inserted) return;
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
}

UPoly& UPoly::operator+=(const UPoly& o) {
    for (const auto& [j, p] : o.coeffs_) add(j, p);
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    for (const auto& [j, p] : o.coeffs_) add(j, -p);
    return *this;
}

UPoly UPoly::truncated(std::size_t cutoff) const {
    UPoly out;
    for (const auto& [j, p] : coeffs_) {
        if (static_cast<std::size_t>(j) > cutoff) break;
        out.add(j, p);
    }
    return out;
}

std::string UPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [j, p] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += "(" + p.str() + ")";
        if (j > 0) s += "*u^" + std::to_string(j);
    }
    return s;
}

UPoly mul(const UPoly& a, const UPoly& b, std::size_t cutoff) {
    UPoly out;
    for (const auto& [i, p] : a.coeffs())
        for (const auto& [j, q] : b.coeffs()) {
            if (static_cast<std::size_t>(i + j) > cutoff) break;
            out.add(i + j, p * q);
        }
    return out;
}

UPoly geom(const UPoly& a, std::size_t cutoff) {
    if (!a.coeff(0).is_zero()) throw std::invalid_argument("geometric series of an element with a u^0 term");
    // every power of `a` raises the u-power by at least one
    UPoly sum(Poly::one());
    UPoly power(Poly::one());
    for (std::size_t i = 0; i < cutoff; ++i) {
        power = mul(power, a, cutoff);
        if (power.is_zero()) break;
        sum += power;
    }
    return sum;
}

namespace {

struct LetterImages {
    UPoly x;
    UPoly y;
};

UPoly monomial(const Poly& p, int j) {
    UPoly out;
    out.add(j, p);
    return out;
}

LetterImages forward_images(std::size_t cutoff) {
    const Poly x = Poly::letter(Letter::x), y = Poly::letter(Letter::y);
    const UPoly inv_1_yu = geom(monomial(y, 1), cutoff);
    const UPoly one_xu_yu = UPoly(Poly::one()) - monomial(x, 1) - monomial(y, 1);
    return {mul(UPoly(x), inv_1_yu, cutoff), mul(mul(one_xu_yu, UPoly(y), cutoff), inv_1_yu, cutoff)};
}

LetterImages inverse_images(std::size_t cutoff) {
    const Poly x = Poly::letter(Letter::x), y = Poly::letter(Letter::y);
    const UPoly inv_1_xu = geom(monomial(x, 1), cutoff);
    const UPoly one_xu_yu = UPoly(Poly::one()) - monomial(x, 1) - monomial(y, 1);
    return {mul(mul(UPoly(x), inv_1_xu, cutoff), one_xu_yu, cutoff), mul(inv_1_xu, UPoly(y), cutoff)};
}

UPoly substitute(const LetterImages& images, const UPoly& p, std::size_t cutoff) {
    UPoly out;
    for (const auto& [j, poly] : p.coeffs()) {
        if (static_cast<std::size_t>(j) > cutoff) break;
        for (const auto& [w, c] : poly.terms()) {
            if (w.weight() > cutoff + static_cast<std::size_t>(j))
                throw std::invalid_argument("word " + w.str() + " heavier than truncation " +
                                            std::to_string(cutoff));
            UPoly img = monomial(Poly(Word{}, c), j);
            for (std::size_t i = 0; i < w.length() && !img.is_zero(); ++i)
                img = mul(img, w[i] == Letter::x ? images.x : images.y, cutoff);
            out += img;
        }
    }
    return out;
}

}  // namespace

UPoly delta_u(const UPoly& p, std::size_t cutoff) {
    return substitute(forward_images(cutoff), p, cutoff);
}

UPoly delta_u(const Poly& p, std::size_t cutoff) { return delta_u(UPoly(p), cutoff); }

UPoly delta_u_inv(const UPoly& p, std::size_t cutoff) {
    return substitute(inverse_images(cutoff), p, cutoff);
}

UPoly delta_u_inv(const Poly& p, std::size_t cutoff) { return delta_u_inv(UPoly(p), cutoff); }

}  // namespace mzv
