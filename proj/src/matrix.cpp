#include "rcanon/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "rcanon/errors.hpp"

namespace rcanon {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Mat Mat::diagonal(std::span<const Scalar> entries) {
    Mat m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

Mat Mat::from_complex(const CMatrix& c) {
    Mat m(static_cast<std::size_t>(c.rows()), static_cast<std::size_t>(c.cols()));
    for (Eigen::Index i = 0; i < c.rows(); ++i)
        for (Eigen::Index j = 0; j < c.cols(); ++j)
            m(i, j) = Scalar(c(i, j));
    return m;
}

Mat Mat::from_real(const RMatrix& r) {
    Mat m(static_cast<std::size_t>(r.rows()), static_cast<std::size_t>(r.cols()));
    for (Eigen::Index i = 0; i < r.rows(); ++i)
        for (Eigen::Index j = 0; j < r.cols(); ++j)
            m(i, j) = Scalar(r(i, j));
    return m;
}

Mat Mat::col(std::size_t j) const { return cols_range(j, 1); }

Mat Mat::cols_range(std::size_t first, std::size_t count) const {
    if (first + count > cols_)
        throw std::out_of_range("Mat::cols_range");
    Mat out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j)
            out(i, j) = (*this)(i, first + j);
    return out;
}

void Mat::set_block(std::size_t row, std::size_t col, const Mat& b) {
    if (row + b.rows() > rows_ || col + b.cols() > cols_)
        throw std::out_of_range("Mat::set_block");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(row + i, col + j) = b(i, j);
}

double Mat::norm() const {
    double s = 0.0;
    for (const auto& x : data_)
        s += x.norm2();
    return std::sqrt(s);
}

bool Mat::is_complex() const {
    for (const auto& x : data_)
        if (!x.is_complex())
            return false;
    return true;
}

bool Mat::is_real() const {
    for (const auto& x : data_)
        if (!x.is_real())
            return false;
    return true;
}

CMatrix Mat::to_complex() const {
    CMatrix c(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            c(i, j) = (*this)(i, j).z1();
    return c;
}

RMatrix Mat::to_real() const {
    RMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(i, j) = (*this)(i, j).a;
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Mat +=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Mat -=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

Mat operator+(Mat x, const Mat& y) { return x += y; }
Mat operator-(Mat x, const Mat& y) { return x -= y; }

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols() != y.rows())
        throw std::invalid_argument("Mat *: shape mismatch");
    Mat out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Scalar& xik = x(i, k);
            if (xik == Scalar{})
                continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                out(i, j) += xik * y(k, j);
        }
    return out;
}

Mat operator*(const Mat& m, const Scalar& q) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j) * q;
    return out;
}

Mat operator*(const Scalar& q, const Mat& m) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = q * m(i, j);
    return out;
}

Mat hcat(std::span<const Mat> blocks) {
    if (blocks.empty())
        return {};
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != blocks.front().rows())
            throw std::invalid_argument("hcat: row mismatch");
        cols += b.cols();
    }
    Mat out(blocks.front().rows(), cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        out.set_block(0, at, b);
        at += b.cols();
    }
    return out;
}

Mat block_diag(std::span<const Mat> blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Mat out(rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        out.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return out;
}

Mat st_transpose(const Mat& m, InvolutionTag tag) {
    Mat out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = involve(m(i, j), tag);
    return out;
}

Mat adjoint(const Mat& m) {
    Mat out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = m(i, j).conj();
    return out;
}

RMatrix realify(Complex z) {
    RMatrix r(2, 2);
    r << z.real(), -z.imag(), z.imag(), z.real();
    return r;
}

RMatrix realify(const CMatrix& m) {
    RMatrix r(2 * m.rows(), 2 * m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r.block<2, 2>(2 * i, 2 * j) = realify(m(i, j));
    return r;
}

CMatrix adjoint_embed(const Mat& q) {
    const auto n = static_cast<Eigen::Index>(q.rows());
    const auto p = static_cast<Eigen::Index>(q.cols());
    CMatrix out(2 * n, 2 * p);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < p; ++j) {
            const Complex z1 = q(i, j).z1();
            const Complex z2 = q(i, j).z2();
            out(i, j) = z1;
            out(i, p + j) = z2;
            out(n + i, j) = -std::conj(z2);
            out(n + i, p + j) = std::conj(z1);
        }
    return out;
}

Mat adjoint_pullback(const CMatrix& m) {
    const Eigen::Index n = m.rows() / 2;
    const Eigen::Index p = m.cols() / 2;
    Mat out(static_cast<std::size_t>(n), static_cast<std::size_t>(p));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < p; ++j) {
            // Average the redundant copies so nearby non-image inputs land on the
            // closest embedded matrix.
            const Complex z1 = 0.5 * (m(i, j) + std::conj(m(n + i, p + j)));
            const Complex z2 = 0.5 * (m(i, p + j) - std::conj(m(n + i, j)));
            out(i, j) = Scalar::from_split(z1, z2);
        }
    return out;
}

Mat pullback_eigenvector(const Eigen::Ref<const Eigen::VectorXcd>& u) {
    const Eigen::Index n = u.size() / 2;
    Mat v(static_cast<std::size_t>(n), 1);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i, 0) = Scalar::from_split(u(i), -std::conj(u(n + i)));
    return v;
}

namespace {

bool quaternion_entries(const Mat& m) { return !m.is_complex(); }

} // namespace

Mat inverse(const Mat& m) {
    if (!m.square())
        throw std::invalid_argument("inverse: matrix is not square");
    if (m.rows() == 0)
        return m;
    const bool quat = quaternion_entries(m);
    const CMatrix c = quat ? adjoint_embed(m) : m.to_complex();
    Eigen::FullPivLU<CMatrix> lu(c);
    lu.setThreshold(1e-13);
    if (!lu.isInvertible())
        throw SingularError("matrix is numerically singular");
    const CMatrix inv = lu.inverse();
    if (quat)
        return adjoint_pullback(inv);
    Mat out = Mat::from_complex(inv);
    if (m.is_real())
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j)
                out(i, j).b = 0.0;
    return out;
}

Mat power(const Mat& m, int exponent) {
    if (!m.square())
        throw std::invalid_argument("power: matrix is not square");
    Mat base = exponent < 0 ? inverse(m) : m;
    unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    Mat result = Mat::identity(m.rows());
    while (e != 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e != 0)
            base = base * base;
    }
    return result;
}

Eigen::VectorXd singular_values(const Mat& m) {
    if (quaternion_entries(m)) {
        Eigen::JacobiSVD<CMatrix> svd(adjoint_embed(m));
        const Eigen::VectorXd all = svd.singularValues();
        Eigen::VectorXd half(all.size() / 2);
        for (Eigen::Index k = 0; k < half.size(); ++k)
            half(k) = all(2 * k);
        return half;
    }
    Eigen::JacobiSVD<CMatrix> svd(m.to_complex());
    return svd.singularValues();
}

double condition_number(const Mat& m) {
    const Eigen::VectorXd s = singular_values(m);
    if (s.size() == 0)
        return 1.0;
    const double lo = s(s.size() - 1);
    return lo == 0.0 ? std::numeric_limits<double>::infinity() : s(0) / lo;
}

} // namespace rcanon
