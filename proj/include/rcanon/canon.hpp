#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rcanon/case.hpp"
#include "rcanon/matrix.hpp"
#include "rcanon/spectral.hpp"

namespace rcanon {

struct MatrixPair; // instance.hpp

/// Scalar carried by a sign-bearing 1x1 (or realified 2x2) block.
/// Declaration order is the canonical sort order.
enum class FormScalar { PlusOne, MinusOne, PlusI, MinusI, PlusJ };

std::string_view to_string(FormScalar s);
FormScalar parse_form_scalar(std::string_view s);
Scalar value_of(FormScalar s);

enum class BlockKind { One, Two };

/// How the partner eigenvalue of a two-block is obtained from its index.
enum class PartnerRule { PowR, ConjPowR };

std::string_view to_string(PartnerRule p);

/// One summand of a canonical pair.
///
///   One{x, s}                  ([x], [s])
///   One{x, s, realified}       b1: (x^R, s I2)      b2: (x^R, s L)
///   Two{x, rule, +1}           (diag(x, y), [[0,1],[1,0]])
///   Two{x, rule, -1}           (diag(x, y), skew pattern of the case)
///   Two{x, PowR, realified}    b1: (x^R, [[0,1],[1,0]])              (x^r = x)
///   Two{x, ConjPowR, realified} (diag(x^R, y^R), [[0, sI2], [I2, 0]]) with
///                              s = +1 in b1 and the skew [[0,-I2],[I2,0]] in b2
///
/// where y = partner. L = [[0,-1],[1,0]]. Skew patterns: a3 [[0,1],[-1,0]];
/// b2, c3, c4 [[0,-1],[1,0]].
struct CanonicalBlock {
    BlockKind kind = BlockKind::One;
    EigIndex index;
    FormScalar scalar = FormScalar::PlusOne; ///< One blocks only
    PartnerRule rule = PartnerRule::PowR;    ///< Two blocks only
    EigIndex partner;                        ///< Two blocks only
    int off_sign = 1;                        ///< Two blocks only
    bool realified = false;

    static CanonicalBlock one(EigIndex x, FormScalar s, bool realified = false);
    static CanonicalBlock two(EigIndex x, PartnerRule rule, EigIndex partner, int off_sign, bool realified = false);

    /// Matrix size of the block.
    int dimension() const;

    std::string to_string() const;

    friend bool operator==(const CanonicalBlock&, const CanonicalBlock&) = default;
};

/// Canonical total order: One before Two, then index (zero first), then
/// scalar in the order +1, -1, +i, -i, +j.
bool block_less(const CanonicalBlock& x, const CanonicalBlock& y);

struct CanonicalForm {
    CaseTag case_tag;
    std::vector<CanonicalBlock> blocks; ///< sorted by block_less

    int dimension() const;
    void sort();

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Nonsingular S with (S^{-1} A S, S^st F S) = block_matrices(form), plus the
/// relative residuals of both identities.
struct TransformWitness {
    Mat s;
    double residual_similarity = 0.0;
    double residual_congruence = 0.0;
};

struct Canonicalization {
    CanonicalForm form;
    TransformWitness witness;
};

/// Orbit of x under the identifications of the case: {id, x^r} for a1/a3,
/// {id, conj(x)^r} for a2, and the group generated by x^r and conj for the
/// real and quaternion cases.
std::vector<EigIndex> index_orbit(EigIndex x, CaseTag c);

/// Smallest element of index_orbit (zero first).
EigIndex orbit_rep(EigIndex x, CaseTag c);

struct Inertia {
    int positive = 0;
    int negative = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a nonsingular real symmetric (Identity), complex Hermitian
/// (ComplexConj) or quaternion Hermitian (QuatConj) matrix.
/// Throws SymmetryError, SingularError, UnsupportedContext.
Inertia inertia(const Mat& g, InvolutionTag tag, double eps_rank = 1e-9);

/// Rescalers allowed when normalizing a 1x1 form value.
enum class RescaleConstraint { ComplexOnly, FullH };

struct Normalization {
    FormScalar target;
    Scalar q; ///< involve(q) * c * q == value_of(target)
};

/// The catalog scalars reachable from c as involve(q) c q / |c| for unit q
/// of the given kind. Closed-form table.
std::vector<FormScalar> reachable_scalars(const Scalar& c, RescaleConstraint constraint, CaseKind kind);

/// Rescales a nonzero form value of a quaternion case to the catalog scalar
/// in its orbit. Throws NormalizeError.
Normalization scalar_orbit_normalize(const Scalar& c, RescaleConstraint constraint, CaseKind kind);

/// Block matrices in stored order (direct sums).
std::pair<Mat, Mat> block_matrices(const CanonicalForm& cf);
std::pair<Mat, Mat> block_matrices(const CanonicalBlock& b, CaseTag c);

struct CanonOptions {
    double snap_tol = 1e-6;
    double eps_rank = 1e-9;
    double eps_deflate = 1e-8;
    /// Maximum accepted witness residual.
    double witness_tol = 1e-6;
};

/// Canonical form and witness of a validated pair.
/// Throws ValidationError, spectral errors, PairingDimensionMismatch,
/// DeflationStall, WitnessError.
Canonicalization canonicalize(const MatrixPair& pair);
Canonicalization canonicalize(const Mat& a, const Mat& f, CaseTag c, CanonOptions options = {});

} // namespace rcanon
