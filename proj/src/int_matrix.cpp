#include "cubhom/int_matrix.hpp"

#include <sstream>

namespace cubhom {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (const auto& v : row) data_.push_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) {
                const Int& b = rhs.at(k, c);
                if (b != 0) p.at(r, c) += a * b;
            }
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix s(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + rhs.data_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    IntMatrix s(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - rhs.data_[i];
    return s;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix s(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = -data_[i];
    return s;
}

std::vector<Int> IntMatrix::column(int c) const {
    std::vector<Int> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<Int> y(rows_);
    for (int r = 0; r < rows_; ++r) {
        Int acc = 0;
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0 && x[c] != 0) acc += at(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

void IntMatrix::set_column(int c, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != rows_)
        throw std::invalid_argument("IntMatrix: column length mismatch");
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

IntMatrix IntMatrix::hcat(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("IntMatrix: hcat row mismatch");
    IntMatrix m(rows_, cols_ + rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (int c = 0; c < rhs.cols_; ++c) m.at(r, cols_ + c) = rhs.at(r, c);
    }
    return m;
}

IntMatrix IntMatrix::vcat(const IntMatrix& rhs) const {
    if (cols_ != rhs.cols_) throw std::invalid_argument("IntMatrix: vcat column mismatch");
    IntMatrix m(rows_ + rhs.rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int r = 0; r < rhs.rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(rows_ + r, c) = rhs.at(r, c);
    return m;
}

IntMatrix IntMatrix::block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
        throw std::invalid_argument("IntMatrix: block out of range");
    IntMatrix m(nr, nc);
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c) m.at(r, c) = at(r0 + r, c0 + c);
    return m;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < cols_; ++c)
        if (at(src, c) != 0) at(dst, c) += q * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < rows_; ++r)
        if (at(r, src) != 0) at(r, dst) += q * at(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " [");
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix m(rows, cols);
    int r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) m.at(r0 + r, c0 + c) = b.at(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

}  // namespace cubhom
