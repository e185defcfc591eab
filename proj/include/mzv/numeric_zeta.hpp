#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mzv/poly.hpp"

namespace mzv {

struct ZetaApprox {
    /// Truncated sum plus the estimated tail; lies within tail_bound of the true value.
    double value = 0.0;
    /// Plain nested sum over M >= m1 > ... > mn > 0.
    double truncated = 0.0;
    std::size_t terms_used = 0;
    /// Rigorous bound on zeta - truncated (and so on |zeta - value|); +inf when unavailable.
    double tail_bound = 0.0;
    /// Bound on floating-point accumulation error.
    double rounding_bound = 0.0;
};

/*
 * zeta(k1, ..., kn) by the prefix-sum recurrence
 *   S_n(m) = m^{-kn},  S_j(m) = m^{-kj} sum_{m' < m} S_{j+1}(m'),
 * in O(n M) time. Requires k1 >= 2, all ki >= 1, M >= n.
 */
ZetaApprox zeta_numeric(const std::vector<int>& ks, std::size_t terms);

struct ResidualReport {
    double value = 0.0;
    /// Sum of |coefficient| * (tail_bound + rounding_bound) over the terms.
    double bound = 0.0;
};

/// Evaluates Z on admissible polynomials, caching each word's value.
class ZetaEvaluator {
public:
    explicit ZetaEvaluator(std::size_t terms) : terms_(terms) {}

    std::size_t terms() const { return terms_; }
    /// Z(w); Z(1) = 1 exactly. Throws std::invalid_argument for inadmissible words.
    const ZetaApprox& operator()(const Word& w);
    ResidualReport residual(const Poly& p);

private:
    std::size_t terms_;
    std::map<Word, ZetaApprox> cache_;
};

ResidualReport residual(const Poly& p, std::size_t terms);

}  // namespace mzv
