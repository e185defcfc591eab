#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "mzv/poly.hpp"

namespace mzv {

/// Sparse integer vector, indices strictly increasing, no zero entries.
struct SparseRow {
    std::vector<std::uint32_t> index;
    std::vector<mpz_class> value;

    std::size_t nnz() const { return index.size(); }
    bool empty() const { return index.empty(); }
    /// Divides by the gcd of the entries and makes the leading entry positive.
    void make_primitive();
};

/*
 * Relations of one weight k in the coordinates of basis(k). Rows are stored
 * scaled to primitive integer vectors; scaling does not change any span.
 */
class RelationMatrix {
public:
    explicit RelationMatrix(int weight);
    /// Throws std::invalid_argument unless every poly is admissible and homogeneous of weight k.
    RelationMatrix(int weight, std::span<const Poly> polys);

    int weight() const { return weight_; }
    std::size_t columns() const { return columns_; }
    const std::vector<SparseRow>& rows() const { return rows_; }

    void append(const Poly& p);
    void append(const RelationMatrix& other);

    /// Coordinates of a weight-k poly as a primitive integer row.
    static SparseRow coordinates(int weight, const Poly& p);

private:
    int weight_;
    std::size_t columns_;
    std::vector<SparseRow> rows_;
};

/*
 * Row echelon form grown one row at a time by fraction-free elimination.
 * Each stored row is primitive and owns the pivot at its leading column;
 * reducing a vector against it only touches columns at or after that pivot.
 */
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t columns);

    std::size_t columns() const { return pivot_of_column_.size(); }
    std::size_t rank() const { return rows_.size(); }

    /// Adds the row to the span; returns true when the rank grew.
    bool insert(SparseRow row);
    /// Whether the row lies in the current span.
    bool contains(SparseRow row) const;

    /// Reduces row against the basis until its leading column is free (or it vanishes).
    void reduce(SparseRow& row) const;

private:
    static constexpr std::uint32_t none = 0xffffffffu;

    std::vector<std::uint32_t> pivot_of_column_;
    std::vector<SparseRow> rows_;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

/// Inserts every row of m, sparsest first. Throws BudgetExceeded once the deadline passes.
void extend(EchelonBasis& basis, const RelationMatrix& m, Deadline deadline = std::nullopt);

std::size_t rank(const RelationMatrix& m);
/// Echelon form of all rows of m, sparsest rows inserted first.
EchelonBasis echelon(const RelationMatrix& m, Deadline deadline = std::nullopt);
/// Throws std::invalid_argument on weight mismatch or an inhomogeneous v.
bool in_span(const Poly& v, const RelationMatrix& m);
bool in_span(const Poly& v, int weight, const EchelonBasis& basis);
/// rank(A) + rank(B) - rank(A u B).
std::size_t dim_intersection(const RelationMatrix& a, const RelationMatrix& b);
std::size_t union_rank(const RelationMatrix& a, const RelationMatrix& b);

}  // namespace mzv
