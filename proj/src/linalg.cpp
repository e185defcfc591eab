#include "mzv/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mzv {

void SparseRow::make_primitive() {
    if (value.empty()) return;
    mpz_class g = abs(value.front());
    for (std::size_t i = 1; i < value.size() && g != 1; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value[i].get_mpz_t());
    const bool flip = sgn(value.front()) < 0;
    if (g == 1 && !flip) return;
    if (flip) g = -g;
    for (auto& v : value) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

RelationMatrix::RelationMatrix(int weight) : weight_(weight), columns_(basis_size(weight)) {}

RelationMatrix::RelationMatrix(int weight, std::span<const Poly> polys) : RelationMatrix(weight) {
    rows_.reserve(polys.size());
    for (const Poly& p : polys) append(p);
}

SparseRow RelationMatrix::coordinates(int weight, const Poly& p) {
    const auto k = static_cast<std::size_t>(weight);
    SparseRow row;
    row.index.reserve(p.size());
    row.value.reserve(p.size());
    mpz_class den = 1;
    for (const auto& [w, c] : p.terms()) {
        if (w.weight() != k || !w.admissible())
            throw std::invalid_argument("relation term " + w.str() + " is not an admissible word of weight " +
                                        std::to_string(weight));
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
    }
    // term order within a weight coincides with basis order
    for (const auto& [w, c] : p.terms()) {
        row.index.push_back(static_cast<std::uint32_t>(basis_index(w)));
        mpz_class v = c.value().get_num() * (den / c.value().get_den());
        row.value.push_back(std::move(v));
    }
    row.make_primitive();
    return row;
}

void RelationMatrix::append(const Poly& p) { rows_.push_back(coordinates(weight_, p)); }

void RelationMatrix::append(const RelationMatrix& other) {
    if (other.weight_ != weight_) throw std::invalid_argument("relation matrix weight mismatch");
    rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

EchelonBasis::EchelonBasis(std::size_t columns) : pivot_of_column_(columns, none) {}

namespace {

// row <- a*row - b*pivot_row with a, b chosen to cancel the shared leading entry
void eliminate(SparseRow& row, const SparseRow& pivot) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), row.value.front().get_mpz_t(), pivot.value.front().get_mpz_t());
    const mpz_class a = pivot.value.front() / g;
    const mpz_class b = row.value.front() / g;

    SparseRow out;
    out.index.reserve(row.nnz() + pivot.nnz());
    out.value.reserve(row.nnz() + pivot.nnz());
    std::size_t i = 1, j = 1;
    mpz_class t;
    while (i < row.nnz() || j < pivot.nnz()) {
        if (j == pivot.nnz() || (i < row.nnz() && row.index[i] < pivot.index[j])) {
            out.index.push_back(row.index[i]);
            out.value.push_back(a * row.value[i]);
            ++i;
        } else if (i == row.nnz() || pivot.index[j] < row.index[i]) {
            out.index.push_back(pivot.index[j]);
            out.value.push_back(-b * pivot.value[j]);
            ++j;
        } else {
            t = a * row.value[i];
            mpz_submul(t.get_mpz_t(), b.get_mpz_t(), pivot.value[j].get_mpz_t());
            if (sgn(t) != 0) {
                out.index.push_back(row.index[i]);
                out.value.push_back(t);
            }
            ++i;
            ++j;
        }
    }
    out.make_primitive();
    row = std::move(out);
}

}  // namespace

void EchelonBasis::reduce(SparseRow& row) const {
    while (!row.empty()) {
        const std::uint32_t c = row.index.front();
        if (c >= pivot_of_column_.size()) throw std::out_of_range("row index beyond matrix columns");
        const std::uint32_t p = pivot_of_column_[c];
        if (p == none) return;
        eliminate(row, rows_[p]);
    }
}

bool EchelonBasis::insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    row.make_primitive();
    pivot_of_column_[row.index.front()] = static_cast<std::uint32_t>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool EchelonBasis::contains(SparseRow row) const {
    reduce(row);
    return row.empty();
}

void extend(EchelonBasis& basis, const RelationMatrix& m, Deadline deadline) {
    if (basis.columns() != m.columns()) throw std::invalid_argument("echelon basis weight mismatch");
    std::vector<std::size_t> order(m.rows().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.rows()[a].nnz() < m.rows()[b].nnz(); });
    for (std::size_t i : order) {
        if (deadline && std::chrono::steady_clock::now() > *deadline) throw BudgetExceeded();
        if (!m.rows()[i].empty()) basis.insert(m.rows()[i]);
    }
}

EchelonBasis echelon(const RelationMatrix& m, Deadline deadline) {
    EchelonBasis basis(m.columns());
    extend(basis, m, deadline);
    return basis;
}

std::size_t rank(const RelationMatrix& m) { return echelon(m).rank(); }

bool in_span(const Poly& v, int weight, const EchelonBasis& basis) {
    if (!v.is_homogeneous(static_cast<std::size_t>(weight)))
        throw std::invalid_argument("element is not homogeneous of weight " + std::to_string(weight));
    if (basis.columns() != basis_size(weight)) throw std::invalid_argument("echelon basis weight mismatch");
    return basis.contains(RelationMatrix::coordinates(weight, v));
}

bool in_span(const Poly& v, const RelationMatrix& m) { return in_span(v, m.weight(), echelon(m)); }

std::size_t union_rank(const RelationMatrix& a, const RelationMatrix& b) {
    RelationMatrix both = a;
    both.append(b);
    return rank(both);
}

std::size_t dim_intersection(const RelationMatrix& a, const RelationMatrix& b) {
    if (a.weight() != b.weight()) throw std::invalid_argument("relation matrix weight mismatch");
    return rank(a) + rank(b) - union_rank(a, b);
}

}  // namespace mzv
