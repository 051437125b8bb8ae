#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "rcanon/case.hpp"
#include "rcanon/matrix.hpp"

namespace rcanon {

/// Exact eigenvalue tag: zero, or the root of unity e^{2 pi i k / m} with
/// m = r^2 - 1. Every nonzero eigenvalue of A with A^{r^2} = A is such a root.
class EigIndex {
public:
    constexpr EigIndex() = default;

    static constexpr EigIndex zero() { return EigIndex(-1, 0); }
    /// Root(k mod m).
    static EigIndex root(long k, int m);

    constexpr bool is_zero() const { return residue_ < 0; }
    /// Residue k in [0, m). Meaningless for zero.
    constexpr int residue() const { return residue_; }
    constexpr int modulus() const { return modulus_; }

    /// True for 0, 1 and (m even) -1.
    bool is_real() const;
    /// Closed upper half-plane: k <= m/2 (zero counts as upper).
    bool is_upper() const;

    /// Numeric value; 1, -1, i, -i are produced exactly.
    Complex value() const;

    std::string to_string() const;

    friend constexpr bool operator==(const EigIndex& x, const EigIndex& y) { return x.residue_ == y.residue_; }
    /// Zero first, then by residue.
    friend constexpr std::strong_ordering operator<=>(const EigIndex& x, const EigIndex& y) {
        return x.residue_ <=> y.residue_;
    }

private:
    constexpr EigIndex(int residue, int modulus) : residue_(residue), modulus_(modulus) {}

    int residue_ = -1;
    int modulus_ = 0;
};

/// m = r^2 - 1 (checks the exponent range).
int root_modulus(int r);

/// x -> x^r on indices. Throws SingularError for zero with r < 0.
EigIndex idx_pow_r(EigIndex x, int r);
/// x -> conj(x).
EigIndex idx_conj(EigIndex x);
/// Representative of {x, conj(x)} in the closed upper half-plane.
EigIndex idx_standardize(EigIndex x);

/// Image of x under the F-duality of the case: E_x couples only with
/// E_{pairing_image(x)}. Bilinear cases use x^r, sesquilinear ones conj(x)^r;
/// quaternion cases return the standardized index.
EigIndex pairing_image(EigIndex x, CaseTag c);

/// Both fixed-point conditions, reported separately (the real cases use both).
struct SelfPairing {
    bool pow_fixed = false;      ///< x^r == x
    bool conj_pow_fixed = false; ///< x^r == conj(x)
};
SelfPairing self_pairing(EigIndex x, int r);

/// x == pairing_image(x) for the case's own duality.
bool self_paired(EigIndex x, CaseTag c);

/// Whether x can occur as an eigenvalue of a pair with exponent r
/// (zero requires r >= 2).
bool admissible(EigIndex x, int r);

struct SpectrumEntry {
    EigIndex index;
    int multiplicity = 0;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Snapped spectrum. Over H indices are standardized to the upper half-plane
/// and multiplicities count right H-dimension; over R the report is closed
/// under conjugation.
struct SpectrumReport {
    FieldTag field = FieldTag::C;
    int r = 2;
    std::vector<SpectrumEntry> entries; ///< sorted by index

    int dimension() const;
    /// 0 when absent.
    int multiplicity(EigIndex x) const;

    friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

struct SpectralOptions {
    double snap_tol = 1e-6;
    double eps_rank = 1e-9;
};

/// Snapped spectrum plus cached complex data for eigenspace extraction.
///
/// Works on the complex matrix behind A: A itself over C, its
/// complexification over R, its adjoint embedding over H.
class SpectralDecomposition {
public:
    /// Throws SnapError or NotDiagonalizableError.
    SpectralDecomposition(const Mat& a, FieldTag field, int r, SpectralOptions options = {});
    ~SpectralDecomposition();
    SpectralDecomposition(SpectralDecomposition&&) noexcept;
    SpectralDecomposition& operator=(SpectralDecomposition&&) noexcept;

    const SpectrumReport& report() const;

    /// Lagrange projector onto the x-eigenspace of the underlying complex
    /// matrix, built over every observed eigenvalue.
    CMatrix projector(EigIndex x) const;

    /// Basis B of the x-eigenspace with A B = B value(x):
    ///   C: complex n x d;
    ///   R: real n x d for real x, complex (complexified) n x d otherwise;
    ///   H: for nonreal x (either half-plane) d columns independent over C with
    ///      A v = v value(x); for real x, d columns independent over H.
    /// Throws RankError when the projector rank disagrees with the multiplicity.
    Mat eigenbasis(EigIndex x) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

SpectrumReport snap_spectrum(const Mat& a, FieldTag field, int r, double tol = 1e-6);
Mat eigenbasis(const Mat& a, FieldTag field, int r, EigIndex x, double tol = 1e-6);

/// Orthonormal (w.r.t. v^* w with quaternion conjugation) H-basis of the
/// right H-span of the columns; columns whose residual norm falls below
/// `rel_tol` times the largest column norm are dropped.
Mat quaternion_orthonormal_basis(const Mat& columns, double rel_tol = 1e-8);

} // namespace rcanon
