#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

#include "rcanon/scalar.hpp"

namespace rcanon {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

/// Dense row-major matrix over H. Matrices over R and C use the same type
/// with vanishing components; products keep left-to-right order so the
/// noncommutative case is exact.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat diagonal(std::span<const Scalar> entries);
    static Mat from_complex(const CMatrix& m);
    static Mat from_real(const RMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Scalar> data() const { return data_; }

    Mat col(std::size_t j) const;
    Mat cols_range(std::size_t first, std::size_t count) const;
    void set_block(std::size_t row, std::size_t col, const Mat& b);

    /// Frobenius norm.
    double norm() const;

    bool is_complex() const;
    bool is_real() const;

    /// Drops the j-part of every entry; check is_complex() first where it matters.
    CMatrix to_complex() const;
    RMatrix to_real() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat operator+(Mat x, const Mat& y);
Mat operator-(Mat x, const Mat& y);
Mat operator*(const Mat& x, const Mat& y);
/// Right scalar multiplication M q (each entry m * q).
Mat operator*(const Mat& m, const Scalar& q);
/// Left scalar multiplication q M.
Mat operator*(const Scalar& q, const Mat& m);

Mat hcat(std::span<const Mat> blocks);
Mat block_diag(std::span<const Mat> blocks);

/// M^st: entrywise involution followed by transpose.
Mat st_transpose(const Mat& m, InvolutionTag tag);

/// Componentwise conjugate transpose (quaternion conjugation), the
/// involution behind the standard inner product on H^n.
Mat adjoint(const Mat& m);

/// Realification a + bi -> [[a, -b], [b, a]].
RMatrix realify(Complex z);
/// Entrywise realification of a complex matrix (2n x 2n).
RMatrix realify(const CMatrix& m);

/// Complex adjoint embedding of a quaternion matrix Q = Z1 + Z2 j:
/// [[Z1, Z2], [-conj(Z2), conj(Z1)]].
CMatrix adjoint_embed(const Mat& q);
/// Inverse of adjoint_embed on matrices in its image.
Mat adjoint_pullback(const CMatrix& m);

/// Quaternion vector v with A v = v lambda from an eigenvector u = [u1; u2]
/// of adjoint_embed(A) with eigenvalue lambda.
Mat pullback_eigenvector(const Eigen::Ref<const Eigen::VectorXcd>& u);

/// Inverse over the matrix's own field (H through the adjoint embedding).
/// Throws SingularError when the matrix is numerically singular.
Mat inverse(const Mat& m);

/// Integer power; negative exponents go through the inverse.
Mat power(const Mat& m, int exponent);

/// 2-norm condition number (through the adjoint embedding for H).
double condition_number(const Mat& m);

/// Singular values of the matrix as a linear map over its field; for H the
/// embedding's values, which appear in pairs, are halved in count.
Eigen::VectorXd singular_values(const Mat& m);

} // namespace rcanon
