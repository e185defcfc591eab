#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mzv/poly.hpp"

namespace mzv {

/// Anti-automorphism x <-> y: reverse the word, then swap letters.
Word tau(const Word& w);
Poly tau(const Poly& p);

/// (1 - tau)(p)
Poly one_minus_tau(const Poly& p);

/*
 * Derivation with d_n(x) = -d_n(y) = x (x+y)^{n-1} y, extended by the Leibniz
 * rule. Raises weight by n and maps h0 into x h y. Throws for n < 1.
 */
Poly partial(int n, const Poly& p);
Poly partial(int n, const Word& w);

/// d_n(x) as a polynomial: the 2^{n-1} words x v y. Cached per n.
const Poly& partial_of_x(int n);

/*
 * Degree-l homogeneous part of exp(sum_n d_n / n):
 *   theta_l = sum over partitions lambda of l of (d_{lambda_1} ... d_{lambda_r}) / z_lambda.
 * theta_0 is the identity. Throws for l < 0.
 */
Poly theta(int l, const Poly& p);
/// theta_0(p), ..., theta_lmax(p) from one shared walk over partitions.
std::vector<Poly> theta_up_to(int lmax, const Poly& p);

/// Truncated element of h[[u]]: u-power -> polynomial coefficient.
class UPoly {
public:
    using Coeffs = std::map<int, Poly>;

    UPoly() = default;
    explicit UPoly(const Poly& p) { add(0, p); }

    const Coeffs& coeffs() const { return coeffs_; }
    /// Coefficient of u^j (zero when absent).
    Poly coeff(int j) const;
    void add(int j, const Poly& p);
    bool is_zero() const { return coeffs_.empty(); }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Drops powers u^j with j > cutoff.
    UPoly truncated(std::size_t cutoff) const;
    std::string str() const;

private:
    Coeffs coeffs_;
};

UPoly mul(const UPoly& a, const UPoly& b, std::size_t cutoff);
/// 1 + a + a^2 + ... modulo u^{cutoff+1}; `a` must have no u^0 part.
UPoly geom(const UPoly& a, std::size_t cutoff);

/*
 * Substitution automorphism of h[[u]] fixing u with
 *   x -> x / (1 - yu),   y -> (1 - xu - yu) y / (1 - yu),
 * truncated at u-power <= cutoff. A word at u^j of weight k yields words of
 * weight k + i at u^{j+i}, so nothing else needs cutting. Throws when a word
 * at u^j has weight above cutoff + j (for a plain polynomial: above the cutoff).
 */
UPoly delta_u(const Poly& p, std::size_t cutoff);
UPoly delta_u(const UPoly& p, std::size_t cutoff);

/// Inverse substitution: x -> x (1 - xu - yu) / (1 - xu),  y -> y / (1 - xu).
UPoly delta_u_inv(const Poly& p, std::size_t cutoff);
UPoly delta_u_inv(const UPoly& p, std::size_t cutoff);

}  // namespace mzv
