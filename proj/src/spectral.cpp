#include "rcanon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "rcanon/errors.hpp"

namespace rcanon {

// ---------------------------------------------------------------------------
// Index arithmetic

EigIndex EigIndex::root(long k, int m) {
    if (m <= 0)
        throw ContextError("root modulus must be positive");
    long res = k % m;
    if (res < 0)
        res += m;
    return EigIndex(static_cast<int>(res), m);
}

bool EigIndex::is_real() const { return is_zero() || residue_ == 0 || 2 * residue_ == modulus_; }

bool EigIndex::is_upper() const { return is_zero() || 2 * residue_ <= modulus_; }

Complex EigIndex::value() const {
    if (is_zero())
        return {0.0, 0.0};
    const int k = residue_, m = modulus_;
    if (k == 0)
        return {1.0, 0.0};
    if (2 * k == m)
        return {-1.0, 0.0};
    if (4 * k == m)
        return {0.0, 1.0};
    if (4 * k == 3 * m)
        return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * k / m);
}

std::string EigIndex::to_string() const { return is_zero() ? "zero" : std::to_string(residue_); }

int root_modulus(int r) {
    require_exponent(r);
    return r * r - 1;
}

EigIndex idx_pow_r(EigIndex x, int r) {
    if (x.is_zero()) {
        if (r < 0)
            throw SingularError("zero eigenvalue raised to a negative power");
        return x;
    }
    return EigIndex::root(static_cast<long>(r) * x.residue(), x.modulus());
}

EigIndex idx_conj(EigIndex x) {
    if (x.is_zero())
        return x;
    return EigIndex::root(-static_cast<long>(x.residue()), x.modulus());
}

EigIndex idx_standardize(EigIndex x) { return x.is_upper() ? x : idx_conj(x); }

EigIndex pairing_image(EigIndex x, CaseTag c) {
    if (bilinear(c.kind))
        return idx_pow_r(x, c.r);
    const EigIndex y = idx_pow_r(idx_conj(x), c.r);
    return field_of(c.kind) == FieldTag::H ? idx_standardize(y) : y;
}

SelfPairing self_pairing(EigIndex x, int r) {
    const EigIndex p = idx_pow_r(x, r);
    return {p == x, p == idx_conj(x)};
}

bool self_paired(EigIndex x, CaseTag c) {
    const EigIndex y = field_of(c.kind) == FieldTag::H ? idx_standardize(x) : x;
    return pairing_image(y, c) == y;
}

bool admissible(EigIndex x, int r) {
    if (x.is_zero())
        return r >= 2;
    return x.modulus() == r * r - 1 && x.residue() >= 0 && x.residue() < x.modulus();
}

int SpectrumReport::dimension() const {
    int n = 0;
    for (const auto& e : entries)
        n += e.multiplicity;
    return n;
}

int SpectrumReport::multiplicity(EigIndex x) const {
    for (const auto& e : entries)
        if (e.index == x)
            return e.multiplicity;
    return 0;
}

// ---------------------------------------------------------------------------
// Quaternion Gram-Schmidt

namespace {

Scalar inner(const Mat& u, std::size_t cu, const Mat& v, std::size_t cv) {
    Scalar s;
    for (std::size_t i = 0; i < u.rows(); ++i)
        s += u(i, cu).conj() * v(i, cv);
    return s;
}

double column_norm(const Mat& u, std::size_t c) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.rows(); ++i)
        s += u(i, c).norm2();
    return std::sqrt(s);
}

} // namespace

Mat quaternion_orthonormal_basis(const Mat& columns, double rel_tol) {
    double scale = 0.0;
    for (std::size_t c = 0; c < columns.cols(); ++c)
        scale = std::max(scale, column_norm(columns, c));
    std::vector<Mat> kept;
    Mat basis(columns.rows(), 0);
    for (std::size_t c = 0; c < columns.cols(); ++c) {
        Mat v = columns.col(c);
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : kept)
                v -= q * inner(q, 0, v, 0);
        const double nv = column_norm(v, 0);
        if (nv <= rel_tol * scale)
            continue;
        kept.push_back(v * Scalar(1.0 / nv));
    }
    return kept.empty() ? basis : hcat(kept);
}

// ---------------------------------------------------------------------------
// Spectral decomposition

struct SpectralDecomposition::Impl {
    FieldTag field;
    int r;
    int m;
    SpectralOptions options;
    CMatrix work;                                  ///< complex matrix behind A
    std::vector<std::pair<EigIndex, int>> complex; ///< distinct observed values, complex multiplicity
    SpectrumReport report;

    int complex_multiplicity(EigIndex x) const {
        for (const auto& [idx, mult] : complex)
            if (idx == x)
                return mult;
        return 0;
    }
};

namespace {

EigIndex snap_value(Complex z, int r, int m, double tol) {
    if (std::abs(z) <= tol) {
        if (r < 0)
            throw SnapError("eigenvalue " + std::to_string(std::abs(z)) +
                            " snaps to zero but a negative exponent requires A nonsingular");
        return EigIndex::zero();
    }
    const double turns = std::arg(z) / (2.0 * std::numbers::pi);
    const auto k = static_cast<long>(std::lround(turns * m));
    const EigIndex x = EigIndex::root(k, m);
    const double dist = std::abs(z - x.value());
    if (dist > tol)
        throw SnapError("eigenvalue (" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                        ") is " + std::to_string(dist) + " from every admissible value");
    return x;
}

int nullity(const CMatrix& m, double eps_rank) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0)
        return 0;
    const double thresh = eps_rank * std::max(s(0), 1.0);
    int count = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) <= thresh)
            ++count;
    return count;
}

} // namespace

SpectralDecomposition::SpectralDecomposition(const Mat& a, FieldTag field, int r, SpectralOptions options)
    : impl_(std::make_unique<Impl>()) {
    if (!a.square())
        throw ContextError("spectral decomposition needs a square matrix");
    Impl& s = *impl_;
    s.field = field;
    s.r = r;
    s.m = root_modulus(r);
    s.options = options;
    s.work = field == FieldTag::H ? adjoint_embed(a) : a.to_complex();
    const auto n = s.work.rows();

    std::map<EigIndex, int> algebraic;
    if (n > 0) {
        Eigen::ComplexEigenSolver<CMatrix> solver(s.work, false);
        if (solver.info() != Eigen::Success)
            throw SnapError("eigenvalue iteration did not converge");
        for (Eigen::Index k = 0; k < n; ++k)
            ++algebraic[snap_value(solver.eigenvalues()(k), r, s.m, options.snap_tol)];
    }

    for (const auto& [x, alg] : algebraic) {
        const CMatrix shifted = s.work - x.value() * CMatrix::Identity(n, n);
        const int geo = nullity(shifted, options.eps_rank);
        if (geo < alg)
            throw NotDiagonalizableError("eigenvalue index " + x.to_string() + " has algebraic multiplicity " +
                                         std::to_string(alg) + " but geometric multiplicity " +
                                         std::to_string(geo));
        if (geo > alg)
            throw RankError("eigenvalue index " + x.to_string() + ": null space of dimension " +
                            std::to_string(geo) + " exceeds algebraic multiplicity " + std::to_string(alg));
        s.complex.emplace_back(x, alg);
    }

    s.report.field = field;
    s.report.r = r;
    for (const auto& [x, mult] : s.complex) {
        switch (field) {
        case FieldTag::C: s.report.entries.push_back({x, mult}); break;
        case FieldTag::R:
            if (s.complex_multiplicity(idx_conj(x)) != mult)
                throw NotDiagonalizableError("spectrum of a real matrix is not closed under conjugation");
            s.report.entries.push_back({x, mult});
            break;
        case FieldTag::H:
            if (x.is_real()) {
                if (mult % 2 != 0)
                    throw RankError("real eigenvalue of a quaternion matrix with odd embedded multiplicity");
                s.report.entries.push_back({x, mult / 2});
            } else if (x.is_upper()) {
                if (s.complex_multiplicity(idx_conj(x)) != mult)
                    throw NotDiagonalizableError("embedded spectrum is not closed under conjugation");
                s.report.entries.push_back({x, mult});
            }
            break;
        }
    }
}

SpectralDecomposition::~SpectralDecomposition() = default;
SpectralDecomposition::SpectralDecomposition(SpectralDecomposition&&) noexcept = default;
SpectralDecomposition& SpectralDecomposition::operator=(SpectralDecomposition&&) noexcept = default;

const SpectrumReport& SpectralDecomposition::report() const { return impl_->report; }

CMatrix SpectralDecomposition::projector(EigIndex x) const {
    const Impl& s = *impl_;
    const auto n = s.work.rows();
    CMatrix p = CMatrix::Identity(n, n);
    const Complex vx = x.value();
    for (const auto& [y, mult] : s.complex) {
        if (y == x)
            continue;
        const Complex vy = y.value();
        p = (p * (s.work - vy * CMatrix::Identity(n, n))) / (vx - vy);
    }
    return p;
}

namespace {

/// Orthonormal basis of the range of p with exactly `expected` columns.
template <typename MatrixT>
MatrixT range_basis(const MatrixT& p, int expected, double eps_rank, const EigIndex& x) {
    Eigen::JacobiSVD<MatrixT> svd(p, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    const double thresh = eps_rank * std::max(s.size() > 0 ? s(0) : 0.0, 1.0);
    int rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) > thresh)
            ++rank;
    if (rank != expected)
        throw RankError("projector for index " + x.to_string() + " has numerical rank " + std::to_string(rank) +
                        ", expected " + std::to_string(expected));
    return svd.matrixU().leftCols(expected);
}

/// Null-space basis of (w - lambda I) with `expected` columns.
CMatrix null_basis(const CMatrix& w, Complex lambda, int expected) {
    const auto n = w.rows();
    Eigen::JacobiSVD<CMatrix> svd(w - lambda * CMatrix::Identity(n, n), Eigen::ComputeFullV);
    return svd.matrixV().rightCols(expected);
}

} // namespace

Mat SpectralDecomposition::eigenbasis(EigIndex x) const {
    const Impl& s = *impl_;
    const int cm = s.complex_multiplicity(x);
    if (cm == 0)
        throw RankError("index " + x.to_string() + " is not in the spectrum");
    const auto n = s.work.rows();
    const Complex lambda = x.value();

    const double eig_tol = s.options.snap_tol * std::max(1.0, s.work.norm());
    auto residual_ok = [&](const CMatrix& b) {
        return (s.work * b - b * lambda).norm() <= eig_tol * std::max(1.0, b.norm());
    };

    if (s.field == FieldTag::R && x.is_real()) {
        const RMatrix p = projector(x).real();
        RMatrix b = range_basis<RMatrix>(p, cm, s.options.eps_rank, x);
        if (!residual_ok(b.cast<Complex>())) {
            const RMatrix w = s.work.real();
            Eigen::JacobiSVD<RMatrix> svd(w - lambda.real() * RMatrix::Identity(n, n), Eigen::ComputeFullV);
            b = svd.matrixV().rightCols(cm);
        }
        return Mat::from_real(b);
    }

    CMatrix b = range_basis<CMatrix>(projector(x), cm, s.options.eps_rank, x);
    if (!residual_ok(b))
        b = null_basis(s.work, lambda, cm);

    if (s.field != FieldTag::H)
        return Mat::from_complex(b);

    Mat q(static_cast<std::size_t>(n / 2), static_cast<std::size_t>(cm));
    for (Eigen::Index k = 0; k < cm; ++k)
        q.set_block(0, static_cast<std::size_t>(k), pullback_eigenvector(b.col(k)));
    if (!x.is_real())
        return q;
    Mat h = quaternion_orthonormal_basis(q);
    if (static_cast<int>(h.cols()) != cm / 2)
        throw RankError("quaternion eigenspace for index " + x.to_string() + " has H-dimension " +
                        std::to_string(h.cols()) + ", expected " + std::to_string(cm / 2));
    return h;
}

SpectrumReport snap_spectrum(const Mat& a, FieldTag field, int r, double tol) {
    return SpectralDecomposition(a, field, r, {tol, 1e-9}).report();
}

Mat eigenbasis(const Mat& a, FieldTag field, int r, EigIndex x, double tol) {
    return SpectralDecomposition(a, field, r, {tol, 1e-9}).eigenbasis(x);
}

} // namespace rcanon
