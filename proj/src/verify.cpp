#include "mzv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "mzv/operators.hpp"
#include "mzv/relations.hpp"

namespace mzv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

GradedSeries letter_series(Letter a, std::size_t cutoff) { return GradedSeries(Poly::letter(a), cutoff); }

// 1 + x + ... + x^{terms-1}, i.e. (1 - x^terms) / (1 - x)
GradedSeries finite_geom_x(int terms, std::size_t cutoff) {
    Poly sum;
    for (int i = 0; i < terms; ++i) sum += Poly(Word::power(Letter::x, static_cast<std::size_t>(i)));
    return GradedSeries(sum, cutoff);
}

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::falsified: return "falsified";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

const EchelonBasis& DerivationSpans::at(int k) {
    if (auto it = spans_.find(k); it != spans_.end()) return it->second;
    EchelonBasis basis = k >= 3 ? echelon(RelationMatrix(k, derivation_all(k)))
                                : EchelonBasis(basis_size(k));
    return spans_.emplace(k, std::move(basis)).first->second;
}

bool DerivationSpans::contains(const Poly& v, int k, Poly* remainder) {
    if (!v.is_homogeneous(static_cast<std::size_t>(k)))
        throw std::invalid_argument("element is not homogeneous of weight " + std::to_string(k));
    if (v.is_zero()) {
        if (remainder) *remainder = Poly{};
        return true;
    }
    SparseRow row = RelationMatrix::coordinates(k, v);
    at(k).reduce(row);
    if (remainder) *remainder = poly_of_row(k, row);
    return row.empty();
}

Poly poly_of_row(int k, const SparseRow& row) {
    const std::vector<Word> words = basis(k);
    Poly out;
    for (std::size_t i = 0; i < row.nnz(); ++i) out.add_term(words.at(row.index[i]), Rat(mpq_class(row.value[i])));
    return out;
}

std::pair<GradedSeries, GradedSeries> theorem_i_sides(int m, std::size_t cutoff) {
    if (m < 1) throw std::invalid_argument("theorem (i) needs m >= 1");
    if (cutoff < static_cast<std::size_t>(m) + 2)
        throw std::invalid_argument("theorem (i) needs cutoff >= m + 2");
    const GradedSeries one = GradedSeries::one(cutoff);
    const GradedSeries x = letter_series(Letter::x, cutoff);
    const GradedSeries y = letter_series(Letter::y, cutoff);
    const GradedSeries inv_1_x = geom(Poly::letter(Letter::x), cutoff);
    const GradedSeries x_inv_1_y = x * geom(Poly::letter(Letter::y), cutoff);
    const auto xpow = [&](int e) { return series_pow(x, static_cast<std::size_t>(e)); };

    const GradedSeries lhs = one_minus_tau(xpow(m) * y * inv_1_x * y);

    GradedSeries rhs = theta_minus_one(xpow(m) * y * (one - inv_1_x * y));
    for (int i = 1; i <= m - 1; ++i) {
        const auto e = static_cast<std::size_t>(m - i);
        const GradedSeries arg = xpow(m - i) * y + series_pow(x_inv_1_y, e) * x * y -
                                 series_pow(x_inv_1_y, e - 1) * x * y;
        rhs -= theta(i, arg);
    }
    return {lhs, rhs};
}

std::pair<GradedSeries, GradedSeries> theorem_ii_sides(int n, std::size_t cutoff) {
    if (n < 1) throw std::invalid_argument("theorem (ii) needs n >= 1");
    if (cutoff < static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("theorem (ii) needs cutoff >= n + 1");
    const GradedSeries one = GradedSeries::one(cutoff);
    const GradedSeries x = letter_series(Letter::x, cutoff);
    const GradedSeries y = letter_series(Letter::y, cutoff);
    const GradedSeries inv_1_x_y = geom(Poly::letter(Letter::x), cutoff) * y;

    const GradedSeries lhs =
        one_minus_tau(x * y * series_pow(inv_1_x_y, static_cast<std::size_t>(n - 1)));

    const GradedSeries tail = y * (one - inv_1_x_y);
    GradedSeries rhs = theta_minus_one(x * finite_geom_x(n - 1, cutoff) * tail);
    for (int l = 1; l <= n - 2; ++l) rhs -= theta(l, x * finite_geom_x(n - l - 1, cutoff) * tail);
    return {lhs, rhs};
}

namespace {

VerdictReport theorem_report(std::string claim, std::string param, int value, std::size_t cutoff,
                             const std::pair<GradedSeries, GradedSeries>& sides, Clock::time_point start) {
    VerdictReport r;
    r.claim = std::move(claim);
    r.params = {{std::move(param), value}};
    r.cutoff = cutoff;
    r.residual = (sides.first - sides.second).to_poly();
    r.verdict = r.residual.is_zero() ? Verdict::verified : Verdict::falsified;
    r.elapsed_ms = ms_since(start);
    return r;
}

}  // namespace

VerdictReport verify_theorem_i(int m, std::size_t cutoff) {
    const auto start = Clock::now();
    return theorem_report("theorem-i", "m", m, cutoff, theorem_i_sides(m, cutoff), start);
}

VerdictReport verify_theorem_ii(int n, std::size_t cutoff) {
    const auto start = Clock::now();
    return theorem_report("theorem-ii", "n", n, cutoff, theorem_ii_sides(n, cutoff), start);
}

Poly corollary_i_element(int s, int t) {
    if (s < 1 || t < 0) throw std::invalid_argument("corollary (i) needs s >= 1 and t >= 0");
    const Word w = Word::power(Letter::x, static_cast<std::size_t>(s)) * Word::from_letter(Letter::y) *
                   Word::power(Letter::x, static_cast<std::size_t>(t)) * Word::from_letter(Letter::y);
    return one_minus_tau(Poly(w));
}

Poly corollary_ii_element(int s, int t) {
    if (!(s > t && t >= 1)) throw std::invalid_argument("corollary (ii) needs s > t >= 1");
    const auto len = static_cast<std::size_t>(s - 2);
    const Word xy = Word::from_bits(0b01, 2);
    Poly sum;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        const Word w = Word::from_bits(bits, len);
        if (w.depth() != static_cast<std::size_t>(t - 1)) continue;
        if (!w.empty() && w.back() != Letter::y) continue;
        sum.add_term(xy * w, Rat(1));
    }
    return one_minus_tau(sum);
}

VerdictReport check_corollary(CorollaryKind kind, int s, int t, DerivationSpans& spans) {
    const auto start = Clock::now();
    const bool first = kind == CorollaryKind::i;
    const Poly element = first ? corollary_i_element(s, t) : corollary_ii_element(s, t);
    const int k = first ? s + t + 2 : s;
    VerdictReport r;
    r.claim = first ? "corollary-i" : "corollary-ii";
    r.params = {{"s", s}, {"t", t}};
    r.cutoff = static_cast<std::size_t>(k);
    r.verdict = spans.contains(element, k, &r.residual) ? Verdict::verified : Verdict::falsified;
    r.elapsed_ms = ms_since(start);
    return r;
}

VerdictReport check_corollary(CorollaryKind kind, int s, int t) {
    DerivationSpans spans;
    return check_corollary(kind, s, t, spans);
}

std::vector<ConjectureVerdict> conjecture_scan(int max_weight, DerivationSpans& spans) {
    if (max_weight < 6) throw std::invalid_argument("conjecture scan needs max weight >= 6");
    std::vector<ConjectureVerdict> out;
    for (int k = 5; k <= max_weight; ++k)
        for (int m = 3; m <= k; ++m)
            for (int n = 3; m + n - 1 <= k; ++n) {
                ConjectureVerdict v;
                v.m = m;
                v.n = n;
                v.weight = k;
                v.element = one_minus_tau(sum_depth_k1(k, n, m));
                if (v.element.is_zero()) continue;
                v.in_span = spans.contains(v.element, k, &v.remainder);
                out.push_back(std::move(v));
            }
    return out;
}

std::vector<ConjectureVerdict> conjecture_scan(int max_weight) {
    DerivationSpans spans;
    return conjecture_scan(max_weight, spans);
}

std::string_view table_row_label(std::size_t row) {
    static constexpr std::array<std::string_view, table_rows> labels = {
        "Duality (fixed wt, dep, and ht)",
        "Duality (fixed wt, dep, and k1)",
        "1. union 2.",
        "Duality",
        "Derivation relation",
        "4. union 5. (Ohno relation)",
        "4. intersect 5.",
    };
    if (row < 1 || row > table_rows) throw std::out_of_range("table row index");
    return labels[row - 1];
}

bool TableReport::complete() const {
    return std::all_of(columns.begin(), columns.end(), [](const TableColumn& c) {
        return std::all_of(c.rows.begin(), c.rows.end(), [](const auto& v) { return v.has_value(); });
    });
}

bool TableReport::consistent() const {
    for (const TableColumn& c : columns) {
        const auto& r = c.rows;
        auto le = [](const auto& a, const auto& b) { return !a || !b || *a <= *b; };
        if (!le(r[0], r[2]) || !le(r[1], r[2]) || !le(r[2], r[3])) return false;
        if (!le(r[3], r[5]) || !le(r[4], r[5])) return false;
        if (r[3] && r[4] && r[5] && r[6] && *r[6] + *r[5] != *r[3] + *r[4]) return false;
    }
    return true;
}

TableColumn build_table_column(int k, std::chrono::milliseconds cell_budget) {
    const auto start = Clock::now();
    TableColumn col;
    col.weight = k;

    // each cell gets its own deadline; an exceeded cell stays empty
    auto cell = [&](auto&& compute) -> std::optional<std::size_t> {
        try {
            return compute(Deadline(Clock::now() + cell_budget));
        } catch (const BudgetExceeded&) {
            return std::nullopt;
        }
    };

    const RelationMatrix ht(k, duality_ht_sum(k));
    const RelationMatrix k1(k, duality_k1_sum(k));
    const RelationMatrix dual(k, duality_all(k));

    col.rows[0] = cell([&](Deadline d) { return echelon(ht, d).rank(); });
    col.rows[1] = cell([&](Deadline d) { return echelon(k1, d).rank(); });
    col.rows[2] = cell([&](Deadline d) {
        EchelonBasis e = echelon(ht, d);
        extend(e, k1, d);
        return e.rank();
    });
    col.rows[3] = cell([&](Deadline d) { return echelon(dual, d).rank(); });

    std::optional<EchelonBasis> derivation;
    col.rows[4] = cell([&](Deadline d) {
        derivation = echelon(RelationMatrix(k, derivation_all(k)), d);
        return derivation->rank();
    });
    if (derivation) {
        col.rows[5] = cell([&](Deadline d) {
            extend(*derivation, dual, d);
            return derivation->rank();
        });
    }
    if (col.rows[3] && col.rows[4] && col.rows[5]) col.rows[6] = *col.rows[3] + *col.rows[4] - *col.rows[5];
    col.elapsed_ms = ms_since(start);
    return col;
}

TableReport build_table(const TableOptions& options) {
    if (options.min_weight < 3 || options.max_weight < options.min_weight)
        throw std::invalid_argument("table weights must satisfy 3 <= min <= max");
    const auto start = Clock::now();
    TableReport report;
    report.max_weight = options.max_weight;
    const auto count = static_cast<std::size_t>(options.max_weight - options.min_weight + 1);
    report.columns.resize(count);

    // heaviest weights first so the slowest jobs start early
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            const std::size_t slot = count - 1 - i;
            report.columns[slot] = build_table_column(options.min_weight + static_cast<int>(slot), options.cell_budget);
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(count)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace mzv
