#include "mzv/numeric_zeta.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mzv {

namespace {

// Neumaier-compensated running sum
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        const double t = sum + v;
        carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

// Sum over m > M of (1 + ln m)^{n-1} / ((n-1)! m^{k1}) bounds the part of the
// nested sum with m1 > M, since the inner sum over m1 > m2 > ... > mn is at most
// H_{m1-1}^{n-1} / (n-1)!. The summand decreases on [M, inf) when
// k1 (1 + ln M) >= n - 1, so the sum is at most the integral from M.
double tail_bound(int k1, std::size_t depth, std::size_t terms) {
    const double m = static_cast<double>(terms);
    const double log_term = 1.0 + std::log(m);
    const auto j = static_cast<int>(depth) - 1;
    if (k1 * log_term < j) return std::numeric_limits<double>::infinity();
    const double s1 = k1 - 1.0;
    double total = 0.0;
    double falling = 1.0;  // j! / (j - i)!
    for (int i = 0; i <= j; ++i) {
        total += falling * std::pow(log_term, j - i) / std::pow(s1, i + 1);
        falling *= j - i;
    }
    return std::pow(m, -s1) * total / std::tgamma(j + 1.0);
}

// Fits partial sums P(M') ~ zeta - M'^{1-k1} sum_i c_i ln^i M' - M'^{-k1} sum_i d_i ln^i M'
// at M' = M, M/2, M/4, ... and returns the fitted zeta - P(M).
double fitted_tail(const std::vector<std::pair<double, double>>& samples, int k1, std::size_t depth) {
    const auto n = static_cast<Eigen::Index>(depth);
    const Eigen::Index unknowns = 2 * n + 1;
    const auto rows = static_cast<Eigen::Index>(samples.size());
    if (rows < unknowns + 1) return 0.0;
    Eigen::MatrixXd a(rows, unknowns);
    Eigen::VectorXd b(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto [mp, partial] = samples[static_cast<std::size_t>(r)];
        const double lg = std::log(mp);
        a(r, 0) = 1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            a(r, 1 + i) = -std::pow(lg, static_cast<double>(i)) * std::pow(mp, 1.0 - k1);
            a(r, 1 + n + i) = -std::pow(lg, static_cast<double>(i)) * std::pow(mp, -static_cast<double>(k1));
        }
        b(r) = partial;
    }
    Eigen::VectorXd scale = a.cwiseAbs().colwise().maxCoeff().transpose();
    for (Eigen::Index c = 0; c < unknowns; ++c)
        if (scale(c) > 0) a.col(c) /= scale(c);
    const Eigen::VectorXd sol = a.colPivHouseholderQr().solve(b);
    const double limit = sol(0) / scale(0);
    return limit - samples.front().second;
}

}  // namespace

ZetaApprox zeta_numeric(const std::vector<int>& ks, std::size_t terms) {
    if (ks.empty()) throw std::invalid_argument("empty composition");
    if (ks.front() < 2) throw std::invalid_argument("zeta requires k1 >= 2");
    for (int k : ks)
        if (k < 1) throw std::invalid_argument("composition entries must be positive");
    const std::size_t depth = ks.size();
    if (terms < depth) throw std::invalid_argument("truncation must be at least the depth");

    // level[m-1] holds S_j(m) for the level j being built, innermost first
    std::vector<double> level(terms);
    for (std::size_t m = 1; m <= terms; ++m) level[m - 1] = std::pow(static_cast<double>(m), -ks.back());
    for (std::size_t j = depth - 1; j-- > 0;) {
        CompensatedSum prefix;
        const double k = ks[j];
        for (std::size_t m = 1; m <= terms; ++m) {
            const double below = prefix.value();
            prefix.add(level[m - 1]);
            level[m - 1] = below * std::pow(static_cast<double>(m), -k);
        }
    }

    // partial sums at M, M/2, M/4, ... for the tail fit
    std::vector<std::size_t> checkpoints;
    for (std::size_t mp = terms; mp >= 32 && checkpoints.size() < 2 * depth + 4; mp /= 2) checkpoints.push_back(mp);
    std::vector<std::pair<double, double>> samples(checkpoints.size());

    CompensatedSum total;
    std::size_t next = checkpoints.size();
    for (std::size_t m = 1; m <= terms; ++m) {
        total.add(level[m - 1]);
        if (next > 0 && checkpoints[next - 1] == m) {
            --next;
            samples[next] = {static_cast<double>(m), total.value()};
        }
    }

    ZetaApprox out;
    out.terms_used = terms;
    out.truncated = total.value();
    out.tail_bound = tail_bound(ks.front(), depth, terms);
    out.rounding_bound = 8.0 * (depth + 1.0) * std::numeric_limits<double>::epsilon() * out.truncated;

    double tail = fitted_tail(samples, ks.front(), depth);
    if (!std::isfinite(tail) || tail < 0.0) tail = 0.0;
    tail = std::min(tail, out.tail_bound);
    out.value = out.truncated + tail;
    return out;
}

const ZetaApprox& ZetaEvaluator::operator()(const Word& w) {
    if (!w.admissible()) throw std::invalid_argument("Z is only defined on admissible words: " + w.str());
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    ZetaApprox z;
    if (w.empty()) {
        z.value = z.truncated = 1.0;
    } else {
        z = zeta_numeric(composition_of_word(w), terms_);
    }
    return cache_.emplace(w, z).first->second;
}

ResidualReport ZetaEvaluator::residual(const Poly& p) {
    ResidualReport out;
    for (const auto& [w, c] : p.terms()) {
        const ZetaApprox& z = (*this)(w);
        const double coeff = c.to_double();
        out.value += coeff * z.value;
        out.bound += std::abs(coeff) * (z.tail_bound + z.rounding_bound);
    }
    return out;
}

ResidualReport residual(const Poly& p, std::size_t terms) {
    ZetaEvaluator z(terms);
    return z.residual(p);
}

}  // namespace mzv
