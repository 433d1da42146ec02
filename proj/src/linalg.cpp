#include "spectra/linalg.hpp"

namespace spectra {
namespace {

struct Echelon {
    Matrix m;                        // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per pivot row
};

Echelon rref(const Matrix& in) {
    Matrix m = in;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        Scalar inv = m.at(row, col).inv();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& v = at(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
    Matrix r(*this);
    for (auto& v : r.data_) v *= c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    for (auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

std::size_t Matrix::rank() const { return rref(*this).pivots.size(); }

std::vector<std::size_t> Matrix::pivot_columns() const { return rref(*this).pivots; }

Matrix Matrix::kernel() const {
    Echelon e = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::size_t free_count = cols_ - e.pivots.size();
    Matrix k(field_, cols_, free_count);
    std::size_t kc = 0;
    for (std::size_t col = 0; col < cols_; ++col) {
        if (is_pivot[col]) continue;
        k.at(col, kc) = Scalar::one(field_);
        for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
            k.at(e.pivots[pr], kc) = -e.m.at(pr, col);
        ++kc;
    }
    return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    Echelon e = rref(hcat(*this, rhs));
    Matrix x(field_, cols_, rhs.cols());
    for (std::size_t pr = 0; pr < e.pivots.size(); ++pr) {
        if (e.pivots[pr] >= cols_) return std::nullopt;  // inconsistent system
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.at(e.pivots[pr], j) = e.m.at(pr, cols_ + j);
    }
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(field_, rows_));
    if (!x) return std::nullopt;
    // solve() gives a solution; verify invertibility via rank.
    if (rank() != rows_) return std::nullopt;
    return x;
}

bool matrices_commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

} // namespace spectra
