#pragma once

#include <cstddef>
#include <vector>

#include "symdet/field.hpp"

namespace symdet {

/// Dense matrix of exact field elements, row-major.
class Matrix {
  public:
    Matrix(const FieldDescriptor& desc, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldDescriptor& desc, std::size_t n);
    static Matrix direct_sum(const Matrix& a, const Matrix& b);

    const FieldDescriptor& descriptor() const { return desc_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const FieldElement& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator-() const;
    Matrix scaled(const FieldElement& c) const;

    Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& m);

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

  private:
    FieldDescriptor desc_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

/// Exact determinant: fraction-free Bareiss elimination over Q (on a row-scaled
/// integer matrix), Gaussian elimination with pivoting over F_p.
FieldElement determinant(const Matrix& a);

/// Exact inverse via Gauss-Jordan; throws Singular.
Matrix inverse(const Matrix& a);

bool is_invertible(const Matrix& a);

/// A11 - A12 A22^{-1} A21 for the 2x2 block split with leading block of the given
/// size; throws SingularTrailingBlock when the trailing block is not invertible.
Matrix schur_complement(const Matrix& a, std::size_t split);

/// A = Y^T diag(B, 0) Y with Y invertible and B invertible diagonal of size rank(A).
struct RankFactorization {
    Matrix y;
    Matrix b;
    std::size_t rank;
};

/// Symmetric congruence diagonalization. When no nonzero diagonal entry remains,
/// a row+column addition manufactures the pivot 2*a_jk — the step that needs
/// characteristic != 2. Pivot selection is lowest-index-first throughout.
RankFactorization rank_factorize(const Matrix& a);

} // namespace symdet
