// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gammaq/field.hpp"

namespace gammaq {

/// Sparse matrix over an exact coefficient field, stored row-major with
/// sorted column indices.  Elimination uses a fixed pivot rule — smallest
/// pivot column first, ties broken by smallest row index — so echelon forms,
/// ranks, kernels and solutions are bit-for-bit reproducible.  Small
/// matrices take a dense elimination path internally; both paths implement
/// the same pivot rule and produce identical results.
class ExactMatrix {
public:
    using SparseRow = std::vector<std::pair<int, Scalar>>;

    ExactMatrix(Field f, int rows, int cols);

    const Field& field() const { return field_; }
    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    void set(int r, int c, const Scalar& v);      ///< overwrite entry
    void add(int r, int c, const Scalar& v);      ///< accumulate into entry
    Scalar get(int r, int c) const;
    const SparseRow& row(int r) const { return rows_.at(r); }
    bool row_is_zero(int r) const { return rows_.at(r).empty(); }

    int rank() const;
    /// Reduced row echelon form with zero rows dropped; pivot columns are
    /// strictly increasing and pivots are 1.
    ExactMatrix rref() const;
    /// Basis of the right kernel {x : Ax = 0}, one vector per row of the
    /// returned matrix, ordered by free column.
    ExactMatrix kernel_basis() const;
    /// Any solution of Ax = b, or nullopt if the system is inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    bool same_row_space(const ExactMatrix& o) const;
    /// Reduce v against this matrix, which must be in reduced row echelon
    /// form; returns the remainder (zero iff v lies in the row space).
    std::vector<Scalar> reduce_vector(std::vector<Scalar> v) const;
    bool in_row_space(const std::vector<Scalar>& v) const;
    /// Grow a matrix in reduced row echelon form by one vector: if v is
    /// independent of the current rows it is reduced, normalized and
    /// inserted (the form is preserved) and true is returned; otherwise the
    /// matrix is untouched and false is returned.  Much cheaper than
    /// restacking and re-eliminating when rows arrive one at a time.
    bool absorb_row(const std::vector<Scalar>& v);

    ExactMatrix vstack(const ExactMatrix& o) const;
    ExactMatrix transpose() const;
    ExactMatrix multiply(const ExactMatrix& o) const;

    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    static ExactMatrix from_rows(Field f, int cols,
                                 const std::vector<std::vector<Scalar>>& dense_rows);
    std::vector<Scalar> dense_row(int r) const;

private:
    struct Echelon {
        std::vector<SparseRow> rows;   // rref rows, pivot cols increasing
        std::vector<int> pivot_cols;
    };
    Echelon echelon() const;
    Echelon echelon_sparse() const;
    Echelon echelon_dense() const;

    Field field_;
    int cols_;
    std::vector<SparseRow> rows_;
};

} // namespace gammaq
