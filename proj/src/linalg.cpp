#include "symdet/linalg.hpp"

#include <algorithm>
#include <utility>

namespace symdet {

Matrix::Matrix(const FieldDescriptor& desc, std::size_t rows, std::size_t cols)
    : desc_(desc), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(desc)) {}

Matrix Matrix::identity(const FieldDescriptor& desc, std::size_t n) {
    Matrix m(desc, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(desc);
    return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    if (a.desc_ != b.desc_) throw Error(ErrorCode::FieldMismatch, "direct sum across fields");
    Matrix m(a.desc_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, a.cols_, b);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(desc_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const FieldElement& e) { return e.is_zero(); });
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorCode::SizeMismatch, "matrix addition shape mismatch");
    }
    Matrix m(desc_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + other.data_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product shape mismatch");
    if (desc_ != other.desc_) throw Error(ErrorCode::FieldMismatch, "matrix product across fields");
    Matrix m(desc_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                m(i, j) += aik * other(k, j);
            }
        }
    }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(desc_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix m(desc_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
    return m;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    Matrix m(desc_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(row0 + i, col0 + j);
    return m;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) (*this)(row0 + i, col0 + j) = m(i, j);
}

bool Matrix::operator==(const Matrix& other) const {
    return desc_ == other.desc_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
}

namespace {

FieldElement determinant_rational_bareiss(const Matrix& a) {
    const std::size_t n = a.rows();
    const FieldDescriptor desc = a.descriptor();
    if (n == 0) return FieldElement::one(desc);

    // Scale each row to integers; det(A) = det(M) / prod(scales).
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    mpz_class scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm_den = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                    a(i, j).rational().get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& q = a(i, j).rational();
            m[i][j] = q.get_num() * (lcm_den / q.get_den());
        }
        scale_product *= lcm_den;
    }

    int sign = 1;
    mpz_class prev_pivot = 1;
    mpz_class work;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == k) return FieldElement::zero(desc);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // m[i][j] = (m[i][j]*pivot - m[i][k]*m[k][j]) / prev_pivot, exactly
                mpz_mul(work.get_mpz_t(), m[i][j].get_mpz_t(), m[k][k].get_mpz_t());
                mpz_submul(work.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), work.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }
    mpq_class det(sign * m[n - 1][n - 1], scale_product);
    det.canonicalize();
    return FieldElement::of_fraction(desc, det.get_num(), det.get_den());
}

FieldElement determinant_prime_field(const Matrix& a) {
    const std::size_t n = a.rows();
    const FieldDescriptor desc = a.descriptor();
    if (n == 0) return FieldElement::one(desc);

    Matrix m = a;
    FieldElement det = FieldElement::one(desc);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!m(i, k).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == n) return FieldElement::zero(desc);
        if (pivot_row != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot_row, j));
            det = -det;
        }
        const FieldElement pivot = m(k, k);
        det *= pivot;
        const FieldElement inv_pivot = pivot.inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            const FieldElement factor = m(i, k) * inv_pivot;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

} // namespace

FieldElement determinant(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    }
    return a.descriptor().is_rationals() ? determinant_rational_bareiss(a)
                                         : determinant_prime_field(a);
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix work = a;
    Matrix inv = Matrix::identity(a.descriptor(), n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!work(i, k).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == n) throw Error(ErrorCode::Singular, "matrix is singular");
        if (pivot_row != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(k, j), work(pivot_row, j));
                std::swap(inv(k, j), inv(pivot_row, j));
            }
        }
        const FieldElement inv_pivot = work(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work(k, j) *= inv_pivot;
            inv(k, j) *= inv_pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || work(i, k).is_zero()) continue;
            const FieldElement factor = work(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= factor * work(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

bool is_invertible(const Matrix& a) {
    return a.rows() == a.cols() && !determinant(a).is_zero();
}

Matrix schur_complement(const Matrix& a, std::size_t split) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "Schur complement input not square");
    if (split > a.rows()) throw Error(ErrorCode::SizeMismatch, "split exceeds matrix size");
    const std::size_t k = a.rows() - split;
    const Matrix a11 = a.block(0, 0, split, split);
    if (k == 0) return a11;
    const Matrix a12 = a.block(0, split, split, k);
    const Matrix a21 = a.block(split, 0, k, split);
    const Matrix a22 = a.block(split, split, k, k);
    Matrix a22_inv(a.descriptor(), 0, 0);
    try {
        a22_inv = inverse(a22);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Singular) {
            throw Error(ErrorCode::SingularTrailingBlock, "trailing block is singular");
        }
        throw;
    }
    return a11 - a12 * a22_inv * a21;
}

RankFactorization rank_factorize(const Matrix& a) {
    if (!a.is_symmetric()) {
        throw Error(ErrorCode::NotSymmetric, "rank factorization requires a symmetric matrix");
    }
    const std::size_t n = a.rows();
    const FieldDescriptor desc = a.descriptor();

    Matrix d = a;                             // congruence-transformed copy
    Matrix m = Matrix::identity(desc, n);     // accumulated row operations: d = m a m^T

    auto swap_sym = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < n; ++t) std::swap(d(i, t), d(j, t));
        for (std::size_t t = 0; t < n; ++t) std::swap(d(t, i), d(t, j));
        for (std::size_t t = 0; t < n; ++t) std::swap(m(i, t), m(j, t));
    };
    auto add_row_col = [&](std::size_t dst, std::size_t src) {
        for (std::size_t t = 0; t < n; ++t) d(dst, t) += d(src, t);
        for (std::size_t t = 0; t < n; ++t) d(t, dst) += d(t, src);
        for (std::size_t t = 0; t < n; ++t) m(dst, t) += m(src, t);
    };
    auto eliminate = [&](std::size_t dst, std::size_t src, const FieldElement& factor) {
        for (std::size_t t = 0; t < n; ++t) d(dst, t) -= factor * d(src, t);
        for (std::size_t t = 0; t < n; ++t) d(t, dst) -= factor * d(t, src);
        for (std::size_t t = 0; t < n; ++t) m(dst, t) -= factor * m(src, t);
    };

    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        // Lowest-index nonzero diagonal entry in the trailing submatrix.
        std::size_t diag = n;
        for (std::size_t j = i; j < n; ++j) {
            if (!d(j, j).is_zero()) {
                diag = j;
                break;
            }
        }
        if (diag == n) {
            // All-zero diagonal: manufacture a pivot from the first nonzero
            // off-diagonal entry; its new value 2*a_jk is nonzero since char != 2.
            std::size_t pj = n, pk = n;
            for (std::size_t j = i; j < n && pj == n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    if (!d(j, k).is_zero()) {
                        pj = j;
                        pk = k;
                        break;
                    }
                }
            }
            if (pj == n) break; // trailing submatrix is zero
            add_row_col(pj, pk);
            diag = pj;
        }
        if (diag != i) swap_sym(i, diag);
        const FieldElement inv_pivot = d(i, i).inverse();
        for (std::size_t r = i + 1; r < n; ++r) {
            if (d(r, i).is_zero()) continue;
            eliminate(r, i, d(r, i) * inv_pivot);
        }
        ++rank;
    }

    Matrix b(desc, rank, rank);
    for (std::size_t i = 0; i < rank; ++i) b(i, i) = d(i, i);
    return RankFactorization{inverse(m.transpose()), std::move(b), rank};
}

} // namespace symdet
