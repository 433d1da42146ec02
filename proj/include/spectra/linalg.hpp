#ifndef SPECTRA_LINALG_HPP
#define SPECTRA_LINALG_HPP

#include <optional>
#include <vector>

#include "spectra/field.hpp"

namespace spectra {

/// Dense matrix over an exact field.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldSpec field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& c) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    Matrix transpose() const;
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    /// Horizontal concatenation [A | B].
    static Matrix hcat(const Matrix& a, const Matrix& b);

    std::size_t rank() const;

    /// Columns form a basis of the null space.
    Matrix kernel() const;

    /// Indices of a maximal independent subset of columns (pivot columns).
    std::vector<std::size_t> pivot_columns() const;

    /// Solves A x = b for each column b of rhs; nullopt if any is unsolvable.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    std::optional<Matrix> inverse() const;

private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

bool matrices_commute(const Matrix& a, const Matrix& b);

} // namespace spectra

#endif
