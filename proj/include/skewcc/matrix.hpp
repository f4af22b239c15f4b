#pragma once

// Dense matrices over F_{p^m} with Gaussian elimination. Codewords are row
// vectors throughout the library; pivoting is deterministic (first nonzero
// entry in column order), so reduced forms and nullspace bases are unique.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "finite_field.hpp"

namespace skewcc {

class Matrix {
   public:
    Matrix(const Field& f, size_t rows, size_t cols)
        : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

    static Matrix identity(const Field& f, size_t n) {
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<std::vector<FieldElement>>& rows) {
        size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(f, rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged row list");
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const Field& field() const { return *field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElement& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<FieldElement> row(size_t i) const {
        return std::vector<FieldElement>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void append_row(const std::vector<FieldElement>& r) {
        if (r.size() != cols_ && rows_ != 0) throw std::invalid_argument("row length mismatch");
        if (rows_ == 0) cols_ = r.size();
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    Matrix transposed() const {
        Matrix t(*field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix out(*field_, rows_, rhs.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const FieldElement& a = at(i, k);
                if (a.is_zero()) continue;
                for (size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) = out.at(i, j) + a * rhs.at(k, j);
            }
        return out;
    }

    bool operator==(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
        for (size_t i = 0; i < data_.size(); ++i)
            if (data_[i] != rhs.data_[i]) return false;
        return true;
    }
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!e.is_zero()) return false;
        return true;
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<size_t> reduce() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t pr = r;
            while (pr < rows_ && at(pr, c).is_zero()) ++pr;
            if (pr == rows_) continue;
            if (pr != r)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
            FieldElement piv_inv = at(r, c).inv();
            for (size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * piv_inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                FieldElement factor = at(i, c);
                for (size_t j = c; j < cols_; ++j) at(i, j) = at(i, j) - factor * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    Matrix rref() const {
        Matrix m = *this;
        m.reduce();
        return m;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.reduce().size();
    }

    // Canonical RREF with zero rows dropped; equal iff equal row spaces.
    Matrix row_space_canonical() const {
        Matrix m = *this;
        size_t r = m.reduce().size();
        Matrix out(*field_, r, cols_);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < cols_; ++j) out.at(i, j) = m.at(i, j);
        return out;
    }

    // Basis (as rows) of { x : M x^T = 0 }, one row per free column of the
    // RREF, in ascending free-column order.
    Matrix nullspace_basis() const {
        Matrix m = *this;
        std::vector<size_t> pivots = m.reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t c : pivots) is_pivot[c] = true;
        Matrix out(*field_, cols_ - pivots.size(), cols_);
        size_t bi = 0;
        for (size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            out.at(bi, fc) = field_->one();
            for (size_t ri = 0; ri < pivots.size(); ++ri) out.at(bi, pivots[ri]) = -m.at(ri, fc);
            ++bi;
        }
        return out;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        Matrix aug(*field_, rows_, 2 * cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = field_->one();
        }
        std::vector<size_t> pivots = aug.reduce();
        if (pivots.size() != rows_ || pivots.back() >= cols_)
            throw std::invalid_argument("matrix is singular");
        Matrix out(*field_, rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
        return out;
    }

   private:
    const Field* field_;
    size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

inline std::vector<FieldElement> operator*(const std::vector<FieldElement>& v, const Matrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
    std::vector<FieldElement> out(m.cols(), m.field().zero());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < m.cols(); ++j) out[j] = out[j] + v[i] * m.at(i, j);
    }
    return out;
}

// True iff the row space of `sub` lies inside the row space of `outer`.
inline bool row_space_contains(const Matrix& outer, const Matrix& sub) {
    if (outer.cols() != sub.cols()) throw std::invalid_argument("length mismatch");
    Matrix stacked = outer;
    for (size_t i = 0; i < sub.rows(); ++i) stacked.append_row(sub.row(i));
    return stacked.rank() == outer.rank();
}

}  // namespace skewcc
