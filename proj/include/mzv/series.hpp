#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "mzv/poly.hpp"

namespace mzv {

/*
 * Truncated element of the completed free algebra: homogeneous parts of
 * weight 0..cutoff. The cutoff is fixed at construction; binary operations
 * require equal cutoffs and never widen them.
 */
class GradedSeries {
public:
    explicit GradedSeries(std::size_t cutoff) : cutoff_(cutoff) {}
    /// Splits p into homogeneous parts, dropping weights above the cutoff.
    GradedSeries(const Poly& p, std::size_t cutoff);

    static GradedSeries one(std::size_t cutoff) { return GradedSeries(Poly::one(), cutoff); }

    std::size_t cutoff() const { return cutoff_; }
    const std::map<std::size_t, Poly>& parts() const { return parts_; }
    /// Weight-k component (zero when absent or above the cutoff).
    Poly part(std::size_t k) const;
    bool is_zero() const { return parts_.empty(); }
    /// All components summed into one polynomial.
    Poly to_poly() const;

    /// Adds a homogeneous polynomial of weight k; ignored when k > cutoff.
    void add_part(std::size_t k, const Poly& p);

    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    GradedSeries operator-() const;
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    friend GradedSeries operator*(GradedSeries a, const Rat& c);

    friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

    std::string str() const;

private:
    void require_same_cutoff(const GradedSeries& o) const;

    std::size_t cutoff_;
    std::map<std::size_t, Poly> parts_;
};

/// Cauchy product of graded components; throws std::invalid_argument on cutoff mismatch.
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_pow(const GradedSeries& a, std::size_t n);

/// 1 + p + p^2 + ... up to weight `cutoff`. p must not contain the empty word.
GradedSeries geom(const Poly& p, std::size_t cutoff);
GradedSeries geom(const GradedSeries& s);

GradedSeries tau(const GradedSeries& s);
GradedSeries one_minus_tau(const GradedSeries& s);

/// theta_l applied to every component.
GradedSeries theta(int l, const GradedSeries& s);
/// Theta(S): weight-k part is sum_{i + l = k} theta_l(S_i).
GradedSeries apply_theta_series(const GradedSeries& s);
/// (Theta - 1)(S).
GradedSeries theta_minus_one(const GradedSeries& s);

}  // namespace mzv
