#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/linalg.hpp"
#include "mzv/poly.hpp"
#include "mzv/series.hpp"

namespace mzv {

enum class Verdict { verified, falsified, skipped };

std::string_view verdict_name(Verdict v);

/// Outcome of one executable claim. `residual` is zero exactly when verified;
/// for membership claims it holds the non-vanishing remainder after reduction.
struct VerdictReport {
    std::string claim;
    std::vector<std::pair<std::string, long>> params;
    std::size_t cutoff = 0;
    Verdict verdict = Verdict::skipped;
    Poly residual;
    double elapsed_ms = 0.0;

    bool verified() const { return verdict == Verdict::verified; }
};

/// Echelon forms of derivation_all(k), built on first use. Not thread-safe; one per job.
class DerivationSpans {
public:
    const EchelonBasis& at(int k);
    /// Membership of a weight-k homogeneous element; the remainder is returned through `remainder`.
    bool contains(const Poly& v, int k, Poly* remainder = nullptr);

private:
    std::map<int, EchelonBasis> spans_;
};

/// Poly from a weight-k coordinate row.
Poly poly_of_row(int k, const SparseRow& row);

/// Both sides of the first identity as truncated series (m >= 1, cutoff >= m + 2).
std::pair<GradedSeries, GradedSeries> theorem_i_sides(int m, std::size_t cutoff);
/// Both sides of the second identity (n >= 1, cutoff >= n + 1).
std::pair<GradedSeries, GradedSeries> theorem_ii_sides(int n, std::size_t cutoff);

VerdictReport verify_theorem_i(int m, std::size_t cutoff);
VerdictReport verify_theorem_ii(int n, std::size_t cutoff);

enum class CorollaryKind { i, ii };

/// (1 - tau)(x^s y x^t y), weight s + t + 2. Requires s >= 1, t >= 0.
Poly corollary_i_element(int s, int t);
/// (1 - tau)(sum xyw) over w of weight s - 2 and depth t - 1 that are empty or end in y.
/// Requires s > t >= 1; the element has weight s.
Poly corollary_ii_element(int s, int t);

VerdictReport check_corollary(CorollaryKind kind, int s, int t, DerivationSpans& spans);
VerdictReport check_corollary(CorollaryKind kind, int s, int t);

struct ConjectureVerdict {
    int m = 0;
    int n = 0;
    int weight = 0;
    bool in_span = false;
    Poly element;
    Poly remainder;
};

/// Weight-k, depth-n, first-exponent-m components of (1 - tau)(x^{m-1} y (y/(1-x))^{n-1})
/// for m, n >= 3 and k <= max_weight, each tested against the derivation span.
std::vector<ConjectureVerdict> conjecture_scan(int max_weight, DerivationSpans& spans);
std::vector<ConjectureVerdict> conjecture_scan(int max_weight);

constexpr std::size_t table_rows = 7;

std::string_view table_row_label(std::size_t row);

struct TableColumn {
    int weight = 0;
    /// nullopt marks a skipped cell.
    std::array<std::optional<std::size_t>, table_rows> rows{};
    double elapsed_ms = 0.0;
};

struct TableReport {
    int max_weight = 0;
    std::vector<TableColumn> columns;
    double elapsed_ms = 0.0;

    bool complete() const;
    /// Row 3 >= rows 1, 2; row 6 >= rows 4, 5; row 3 <= row 4; row 7 = 4 + 5 - 6.
    bool consistent() const;
};

struct TableOptions {
    int min_weight = 3;
    int max_weight = 10;
    /// Wall-clock budget per table cell; cells over budget are skipped.
    std::chrono::milliseconds cell_budget{60'000};
    unsigned threads = 1;
};

TableColumn build_table_column(int k, std::chrono::milliseconds cell_budget);
TableReport build_table(const TableOptions& options);

}  // namespace mzv
