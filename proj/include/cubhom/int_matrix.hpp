#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cubhom/common.hpp"

namespace cubhom {

/// Dense matrix of arbitrary-precision integers.  Row-major storage.
/// Degenerate shapes (0 x n, n x 0) are legal and arise routinely as
/// presentations of trivial groups and empty relation sets.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    std::vector<Int> column(int c) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // matrix * vector
    void set_column(int c, const std::vector<Int>& v);

    /// Horizontal concatenation [this | rhs]; row counts must agree.
    IntMatrix hcat(const IntMatrix& rhs) const;
    /// Vertical concatenation; column counts must agree.
    IntMatrix vcat(const IntMatrix& rhs) const;
    /// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
    IntMatrix block(int r0, int c0, int nr, int nc) const;

    // In-place elementary operations (used by the normal-form routines).
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& q);  // row_dst += q * row_src
    void add_col_multiple(int dst, int src, const Int& q);
    void negate_row(int i);
    void negate_col(int j);

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

}  // namespace cubhom
