#include "mzv/series.hpp"

#include <stdexcept>

#include "mzv/operators.hpp"

namespace mzv {

GradedSeries::GradedSeries(const Poly& p, std::size_t cutoff) : cutoff_(cutoff) {
    for (const auto& [w, c] : p.terms())
        if (w.weight() <= cutoff_) parts_[w.weight()].add_term(w, c);
}

Poly GradedSeries::part(std::size_t k) const {
    const auto it = parts_.find(k);
    return it == parts_.end() ? Poly{} : it->second;
}

Poly GradedSeries::to_poly() const {
    Poly out;
    for (const auto& [k, p] : parts_) out += p;
    return out;
}

void GradedSeries::add_part(std::size_t k, const Poly& p) {
    if (k > cutoff_ || p.is_zero()) return;
    if (!p.is_homogeneous(k)) throw std::invalid_argument("series part is not homogeneous of its weight");
    auto [it, inserted] = parts_.try_emplace(k, p);
    if (inserted) return;
    it->second += p;
    if (it->second.is_zero()) parts_.erase(it);
}

void GradedSeries::require_same_cutoff(const GradedSeries& o) const {
    if (cutoff_ != o.cutoff_)
        throw std::invalid_argument("series cutoff mismatch: " + std::to_string(cutoff_) + " vs " +
                                    std::to_string(o.cutoff_));
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    require_same_cutoff(o);
    for (const auto& [k, p] : o.parts_) add_part(k, p);
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
    require_same_cutoff(o);
    for (const auto& [k, p] : o.parts_) add_part(k, -p);
    return *this;
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries out(cutoff_);
    for (const auto& [k, p] : parts_) out.parts_.emplace(k, -p);
    return out;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.require_same_cutoff(b);
    GradedSeries out(a.cutoff_);
    for (const auto& [i, p] : a.parts_)
        for (const auto& [j, q] : b.parts_) {
            if (i + j > a.cutoff_) break;
            out.add_part(i + j, p * q);
        }
    return out;
}

GradedSeries operator*(GradedSeries a, const Rat& c) {
    if (c.is_zero()) return GradedSeries(a.cutoff_);
    for (auto& [k, p] : a.parts_) p *= c;
    return a;
}

std::string GradedSeries::str() const {
    if (parts_.empty()) return "0 + O(wt " + std::to_string(cutoff_ + 1) + ")";
    std::string s;
    for (const auto& [k, p] : parts_) {
        if (!s.empty()) s += " + ";
        s += "[" + p.str() + "]";
    }
    return s + " + O(wt " + std::to_string(cutoff_ + 1) + ")";
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) { return a * b; }

GradedSeries series_pow(const GradedSeries& a, std::size_t n) {
    GradedSeries out = GradedSeries::one(a.cutoff());
    for (std::size_t i = 0; i < n; ++i) out = out * a;
    return out;
}

GradedSeries geom(const GradedSeries& s) {
    if (!s.part(0).is_zero())
        throw std::invalid_argument("geometric series of an element with a constant term");
    // S = 1 + P S, solved weight by weight: S_k = sum_{i >= 1} P_i S_{k-i}
    GradedSeries out = GradedSeries::one(s.cutoff());
    for (std::size_t k = 1; k <= s.cutoff(); ++k) {
        Poly sk;
        for (const auto& [i, p] : s.parts()) {
            if (i > k) break;
            sk += p * out.part(k - i);
        }
        out.add_part(k, sk);
    }
    return out;
}

GradedSeries geom(const Poly& p, std::size_t cutoff) {
    if (!p.coeff(Word{}).is_zero())
        throw std::invalid_argument("geometric series of a polynomial containing the empty word");
    return geom(GradedSeries(p, cutoff));
}

GradedSeries tau(const GradedSeries& s) {
    GradedSeries out(s.cutoff());
    for (const auto& [k, p] : s.parts()) out.add_part(k, tau(p));
    return out;
}

GradedSeries one_minus_tau(const GradedSeries& s) { return s - tau(s); }

GradedSeries theta(int l, const GradedSeries& s) {
    if (l < 0) throw std::invalid_argument("theta degree must be >= 0");
    GradedSeries out(s.cutoff());
    const auto shift = static_cast<std::size_t>(l);
    for (const auto& [k, p] : s.parts()) {
        if (k + shift > s.cutoff()) break;
        out.add_part(k + shift, theta(l, p));
    }
    return out;
}

GradedSeries apply_theta_series(const GradedSeries& s) {
    GradedSeries out = s;
    out += theta_minus_one(s);
    return out;
}

GradedSeries theta_minus_one(const GradedSeries& s) {
    GradedSeries out(s.cutoff());
    for (const auto& [i, p] : s.parts()) {
        if (i >= s.cutoff()) break;
        const auto thetas = theta_up_to(static_cast<int>(s.cutoff() - i), p);
        for (std::size_t l = 1; l < thetas.size(); ++l) out.add_part(i + l, thetas[l]);
    }
    return out;
}

}  // namespace mzv
