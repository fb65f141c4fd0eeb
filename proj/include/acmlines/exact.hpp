#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace acmlines::exact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Rank over Q. Rows are cleared of denominators, then reduced by
    /// fraction-free (Bareiss) elimination.
    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Sparse integer vector; entries sorted by index with no explicit zeros.
struct SparseVector {
    std::vector<std::pair<int, Integer>> entries;

    bool empty() const noexcept { return entries.empty(); }
    int lead() const { return entries.front().first; }
    const Integer& lead_value() const { return entries.front().second; }
    Integer at(int index) const;

    void push(int index, Integer value);  // appends; index must exceed the last one
    void make_primitive();                // divide by the content, positive lead
    static SparseVector from_map(const std::map<int, Integer>& m);
};

/// Incrementally maintained row-echelon basis of a subspace of Q^dimension.
/// Vectors are kept primitive, so all arithmetic stays in Z.
class EchelonBasis {
public:
    explicit EchelonBasis(int dimension) : dimension_(dimension) {}

    int dimension() const noexcept { return dimension_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds v to the span. Returns true when v was independent.
    bool insert(SparseVector v);

    /// v minus its component in the span (up to a nonzero scalar).
    SparseVector reduce(SparseVector v) const;

    /// Basis of the orthogonal complement {x : <r, x> = 0 for every basis
    /// vector r}, i.e. the nullspace of the matrix whose rows were inserted.
    std::vector<SparseVector> orthogonal_complement() const;

private:
    int dimension_;
    std::map<int, SparseVector> rows_;  // keyed by pivot column
};

std::size_t rank_of(const std::vector<SparseVector>& vectors, int dimension);

}  // namespace acmlines::exact
