// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/matrix.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"

namespace gammaq {

namespace {

// row -= c * pivot, both rows sorted by column.
void axpy_row(ExactMatrix::SparseRow& row, const Scalar& c,
              const ExactMatrix::SparseRow& pivot) {
    if (c.is_zero()) return;
    ExactMatrix::SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -(c * pivot[j].second));
            ++j;
        } else {
            Scalar v = row[i].second - c * pivot[j].second;
            if (!v.is_zero()) out.emplace_back(row[i].first, v);
            ++i;
            ++j;
        }
    }
    row = std::move(out);
}

Scalar row_coeff(const ExactMatrix::SparseRow& row, int col, const Field& f) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it->second : Scalar::zero(f);
}

} // namespace

ExactMatrix::ExactMatrix(Field f, int rows, int cols)
    : field_(f), cols_(cols), rows_(static_cast<std::size_t>(rows)) {
    if (rows < 0 || cols < 0)
        throw InvalidDataError("negative matrix dimension");
}

void ExactMatrix::set(int r, int c, const Scalar& v) {
    if (c < 0 || c >= cols_) throw InvalidDataError("matrix column out of range");
    SparseRow& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {c, v});
    }
}

void ExactMatrix::add(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    set(r, c, get(r, c) + v);
}

Scalar ExactMatrix::get(int r, int c) const {
    return row_coeff(rows_.at(r), c, field_);
}

ExactMatrix::Echelon ExactMatrix::echelon() const {
    // Dense path for small matrices; identical pivot rule either way.
    if (static_cast<long>(rows()) * cols_ <= 64 * 64) return echelon_dense();
    return echelon_sparse();
}

ExactMatrix::Echelon ExactMatrix::echelon_sparse() const {
    std::vector<SparseRow> work = rows_;
    Echelon ech;
    for (;;) {
        // Pivot: smallest leading column, then smallest row index.
        int best = -1;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (work[i].empty()) continue;
            if (best < 0 || work[i].front().first < work[best].front().first) // NOLINT
                best = static_cast<int>(i);
        }
        if (best < 0) break;
        SparseRow pivot = std::move(work[best]);
        work.erase(work.begin() + best);
        const int pcol = pivot.front().first;
        const Scalar inv = pivot.front().second.inverse();
        for (auto& [c, v] : pivot) v = v * inv;
        for (SparseRow& r : work)
            axpy_row(r, row_coeff(r, pcol, field_), pivot);
        for (SparseRow& r : ech.rows)
            axpy_row(r, row_coeff(r, pcol, field_), pivot);
        ech.rows.push_back(std::move(pivot));
        ech.pivot_cols.push_back(pcol);
    }
    return ech;
}

ExactMatrix::Echelon ExactMatrix::echelon_dense() const {
    const int m = rows(), n = cols_;
    std::vector<std::vector<Scalar>> a(
        static_cast<std::size_t>(m), std::vector<Scalar>(static_cast<std::size_t>(n),
                                                         Scalar::zero(field_)));
    for (int r = 0; r < m; ++r)
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)])
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;

    Echelon ech;
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    std::vector<int> pivot_rows;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int r = 0; r < m; ++r)
            if (!used[static_cast<std::size_t>(r)] &&
                !a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        used[static_cast<std::size_t>(pr)] = true;
        auto& prow = a[static_cast<std::size_t>(pr)];
        const Scalar inv = prow[static_cast<std::size_t>(c)].inverse();
        for (int k = c; k < n; ++k)
            prow[static_cast<std::size_t>(k)] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == pr) continue;
            const Scalar f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (int k = c; k < n; ++k)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -
                    f * prow[static_cast<std::size_t>(k)];
        }
        pivot_rows.push_back(pr);
        ech.pivot_cols.push_back(c);
    }
    // Rows are harvested only after all pivots have run, so entries above
    // later pivots are already cleared and the result is fully reduced.
    for (int pr : pivot_rows) {
        const auto& prow = a[static_cast<std::size_t>(pr)];
        SparseRow sr;
        for (int k = 0; k < n; ++k)
            if (!prow[static_cast<std::size_t>(k)].is_zero())
                sr.emplace_back(k, prow[static_cast<std::size_t>(k)]);
        ech.rows.push_back(std::move(sr));
    }
    return ech;
}

int ExactMatrix::rank() const { return static_cast<int>(echelon().rows.size()); }

ExactMatrix ExactMatrix::rref() const {
    Echelon ech = echelon();
    ExactMatrix out(field_, static_cast<int>(ech.rows.size()), cols_);
    out.rows_ = std::move(ech.rows);
    return out;
}

ExactMatrix ExactMatrix::kernel_basis() const {
    Echelon ech = echelon();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    ExactMatrix out(field_, static_cast<int>(free_cols.size()), cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        SparseRow vec;
        for (std::size_t i = 0; i < ech.rows.size(); ++i) {
            const Scalar c = row_coeff(ech.rows[i], fc, field_);
            if (!c.is_zero()) vec.emplace_back(ech.pivot_cols[i], -c);
        }
        vec.emplace_back(fc, Scalar::one(field_));
        std::sort(vec.begin(), vec.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.rows_[k] = std::move(vec);
    }
    return out;
}

std::optional<std::vector<Scalar>> ExactMatrix::solve(const std::vector<Scalar>& b) const {
    if (static_cast<int>(b.size()) != rows())
        throw InvalidDataError("solve: right-hand side length mismatch");
    ExactMatrix aug(field_, rows(), cols_ + 1);
    aug.rows_ = rows_;
    for (int r = 0; r < rows(); ++r)
        if (!b[static_cast<std::size_t>(r)].is_zero())
            aug.rows_[static_cast<std::size_t>(r)].emplace_back(cols_,
                                                                b[static_cast<std::size_t>(r)]);
    Echelon ech = aug.echelon();
    std::vector<Scalar> x(static_cast<std::size_t>(cols_), Scalar::zero(field_));
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
        if (ech.pivot_cols[i] == cols_) return std::nullopt; // 0 = 1 row
        x[static_cast<std::size_t>(ech.pivot_cols[i])] =
            row_coeff(ech.rows[i], cols_, field_);
    }
    return x;
}

bool ExactMatrix::same_row_space(const ExactMatrix& o) const {
    if (cols_ != o.cols_) return false;
    return rref() == o.rref();
}

std::vector<Scalar> ExactMatrix::reduce_vector(std::vector<Scalar> v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw InvalidDataError("reduce_vector: length mismatch");
    for (const SparseRow& row : rows_) {
        if (row.empty()) continue;
        const int pcol = row.front().first;
        const Scalar c = v[static_cast<std::size_t>(pcol)];
        if (c.is_zero()) continue;
        for (const auto& [col, val] : row)
            v[static_cast<std::size_t>(col)] = v[static_cast<std::size_t>(col)] - c * val;
    }
    return v;
}

bool ExactMatrix::in_row_space(const std::vector<Scalar>& v) const {
    for (const Scalar& s : reduce_vector(v))
        if (!s.is_zero()) return false;
    return true;
}

bool ExactMatrix::absorb_row(const std::vector<Scalar>& v) {
    std::vector<Scalar> red = reduce_vector(v);
    int pcol = -1;
    for (int c = 0; c < cols_; ++c)
        if (!red[static_cast<std::size_t>(c)].is_zero()) {
            pcol = c;
            break;
        }
    if (pcol < 0) return false;
    const Scalar inv = red[static_cast<std::size_t>(pcol)].inverse();
    SparseRow nr;
    for (int c = pcol; c < cols_; ++c) {
        const Scalar s = red[static_cast<std::size_t>(c)] * inv;
        if (!s.is_zero()) nr.emplace_back(c, s);
    }
    for (SparseRow& r : rows_) axpy_row(r, row_coeff(r, pcol, field_), nr);
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const SparseRow& r) {
        return r.empty() || r.front().first > pcol;
    });
    rows_.insert(pos, std::move(nr));
    return true;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& o) const {
    if (cols_ != o.cols_)
        throw InvalidDataError("vstack: column count mismatch");
    ExactMatrix out(field_, rows() + o.rows(), cols_);
    out.rows_ = rows_;
    out.rows_.insert(out.rows_.end(), o.rows_.begin(), o.rows_.end());
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(field_, cols_, rows());
    for (int r = 0; r < rows(); ++r)
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)])
            out.rows_[static_cast<std::size_t>(c)].emplace_back(r, v);
    // rows were walked in increasing r, so each output row is sorted
    return out;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o) const {
    if (cols_ != o.rows())
        throw InvalidDataError("multiply: dimension mismatch");
    ExactMatrix out(field_, rows(), o.cols_);
    for (int r = 0; r < rows(); ++r) {
        SparseRow acc;
        for (const auto& [k, v] : rows_[static_cast<std::size_t>(r)])
            axpy_row(acc, -v, o.rows_[static_cast<std::size_t>(k)]);
        out.rows_[static_cast<std::size_t>(r)] = std::move(acc);
    }
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
}

ExactMatrix ExactMatrix::from_rows(Field f, int cols,
                                   const std::vector<std::vector<Scalar>>& dense_rows) {
    ExactMatrix out(f, static_cast<int>(dense_rows.size()), cols);
    for (std::size_t r = 0; r < dense_rows.size(); ++r) {
        if (static_cast<int>(dense_rows[r].size()) != cols)
            throw InvalidDataError("from_rows: ragged row");
        for (int c = 0; c < cols; ++c)
            if (!dense_rows[r][static_cast<std::size_t>(c)].is_zero())
                out.rows_[r].emplace_back(c, dense_rows[r][static_cast<std::size_t>(c)]);
    }
    return out;
}

std::vector<Scalar> ExactMatrix::dense_row(int r) const {
    std::vector<Scalar> v(static_cast<std::size_t>(cols_), Scalar::zero(field_));
    for (const auto& [c, val] : rows_.at(r)) v[static_cast<std::size_t>(c)] = val;
    return v;
}

} // namespace gammaq
