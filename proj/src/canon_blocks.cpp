#include <algorithm>
#include <cmath>
#include <set>

#include "rcanon/canon.hpp"
#include "rcanon/errors.hpp"

namespace rcanon {

std::string_view to_string(FormScalar s) {
    switch (s) {
    case FormScalar::PlusOne: return "+1";
    case FormScalar::MinusOne: return "-1";
    case FormScalar::PlusI: return "+i";
    case FormScalar::MinusI: return "-i";
    case FormScalar::PlusJ: return "+j";
    }
    return "?";
}

FormScalar parse_form_scalar(std::string_view s) {
    for (auto v : {FormScalar::PlusOne, FormScalar::MinusOne, FormScalar::PlusI, FormScalar::MinusI, FormScalar::PlusJ})
        if (to_string(v) == s)
            return v;
    throw ParseError("unknown form scalar '" + std::string(s) + "'");
}

Scalar value_of(FormScalar s) {
    switch (s) {
    case FormScalar::PlusOne: return 1.0;
    case FormScalar::MinusOne: return -1.0;
    case FormScalar::PlusI: return kI;
    case FormScalar::MinusI: return -kI;
    case FormScalar::PlusJ: return kJ;
    }
    return 0.0;
}

std::string_view to_string(PartnerRule p) { return p == PartnerRule::PowR ? "powr" : "conjpowr"; }

CanonicalBlock CanonicalBlock::one(EigIndex x, FormScalar s, bool realified) {
    CanonicalBlock b;
    b.kind = BlockKind::One;
    b.index = x;
    b.scalar = s;
    b.partner = x;
    b.realified = realified;
    return b;
}

CanonicalBlock CanonicalBlock::two(EigIndex x, PartnerRule rule, EigIndex partner, int off_sign, bool realified) {
    CanonicalBlock b;
    b.kind = BlockKind::Two;
    b.index = x;
    b.rule = rule;
    b.partner = partner;
    b.off_sign = off_sign;
    b.realified = realified;
    return b;
}

int CanonicalBlock::dimension() const {
    if (kind == BlockKind::One)
        return realified ? 2 : 1;
    if (!realified)
        return 2;
    return rule == PartnerRule::PowR ? 2 : 4;
}

std::string CanonicalBlock::to_string() const {
    std::string s = kind == BlockKind::One ? "One{" : "Two{";
    s += index.to_string();
    if (kind == BlockKind::One) {
        s += ", ";
        s += rcanon::to_string(scalar);
    } else {
        s += ", ";
        s += rcanon::to_string(rule);
        s += " -> " + partner.to_string();
        s += off_sign > 0 ? ", +1" : ", -1";
    }
    if (realified)
        s += ", realified";
    return s + "}";
}

bool block_less(const CanonicalBlock& x, const CanonicalBlock& y) {
    if (x.kind != y.kind)
        return x.kind == BlockKind::One;
    if (x.index != y.index)
        return x.index < y.index;
    if (x.kind == BlockKind::One)
        return x.scalar < y.scalar;
    if (x.realified != y.realified)
        return !x.realified;
    if (x.rule != y.rule)
        return x.rule < y.rule;
    return x.off_sign > y.off_sign;
}

int CanonicalForm::dimension() const {
    int n = 0;
    for (const auto& b : blocks)
        n += b.dimension();
    return n;
}

void CanonicalForm::sort() { std::stable_sort(blocks.begin(), blocks.end(), block_less); }

// ---------------------------------------------------------------------------

std::vector<EigIndex> index_orbit(EigIndex x, CaseTag c) {
    std::set<EigIndex> seen{x};
    std::vector<EigIndex> frontier{x};
    const bool with_conj = field_of(c.kind) != FieldTag::C;
    while (!frontier.empty()) {
        const EigIndex y = frontier.back();
        frontier.pop_back();
        std::vector<EigIndex> next;
        if (c.kind == CaseKind::a2)
            next.push_back(idx_pow_r(idx_conj(y), c.r));
        else
            next.push_back(idx_pow_r(y, c.r));
        if (with_conj)
            next.push_back(idx_conj(y));
        for (const auto& z : next)
            if (seen.insert(z).second)
                frontier.push_back(z);
    }
    return {seen.begin(), seen.end()};
}

EigIndex orbit_rep(EigIndex x, CaseTag c) { return index_orbit(x, c).front(); }

// ---------------------------------------------------------------------------

namespace {

template <typename M>
Inertia count_signs(const M& h, double eps_rank, int multiplicity) {
    Eigen::SelfAdjointEigenSolver<M> es(h, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double scale = ev.size() > 0 ? ev.cwiseAbs().maxCoeff() : 0.0;
    Inertia in;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        if (std::abs(ev(k)) <= eps_rank * scale || scale == 0.0)
            throw SingularError("form is singular: eigenvalue " + std::to_string(ev(k)));
        (ev(k) > 0 ? in.positive : in.negative) += 1;
    }
    in.positive /= multiplicity;
    in.negative /= multiplicity;
    return in;
}

} // namespace

Inertia inertia(const Mat& g, InvolutionTag tag, double eps_rank) {
    if (!g.square())
        throw SymmetryError("inertia needs a square matrix");
    if (g.rows() == 0)
        return {};
    switch (tag) {
    case InvolutionTag::Identity:
        if (!g.is_real())
            throw UnsupportedContext("complex symmetric forms have no inertia; use a real symmetric matrix");
        break;
    case InvolutionTag::ComplexConj:
        if (!g.is_complex())
            throw UnsupportedContext("complex conjugation needs complex entries");
        break;
    case InvolutionTag::QuatConj: break;
    case InvolutionTag::QuatSemiconj:
        throw UnsupportedContext("forms Hermitian under quaternion semiconjugation have no inertia");
    }
    const double asym = (st_transpose(g, tag) - g).norm();
    if (asym > 1e-9 * std::max(g.norm(), 1e-300))
        throw SymmetryError("matrix is not symmetric/Hermitian (residual " + std::to_string(asym) + ")");
    if (tag == InvolutionTag::Identity)
        return count_signs<RMatrix>(g.to_real(), eps_rank, 1);
    if (tag == InvolutionTag::ComplexConj)
        return count_signs<CMatrix>(g.to_complex(), eps_rank, 1);
    return count_signs<CMatrix>(adjoint_embed(g), eps_rank, 2);
}

// ---------------------------------------------------------------------------
// Scalar orbits of the quaternion cases

namespace {

constexpr double kScalarTol = 1e-8;

bool quaternion_case(CaseKind k) {
    return k == CaseKind::c1 || k == CaseKind::c2 || k == CaseKind::c3 || k == CaseKind::c4;
}

void require_admissible_value(const Scalar& c, CaseKind kind) {
    if (!quaternion_case(kind))
        throw UnsupportedContext("scalar orbits are defined for the quaternion cases only");
    const double n = c.abs();
    if (!(n > 0.0))
        throw NormalizeError("form value is zero");
    const Scalar mirrored = static_cast<double>(epsilon_of(kind)) * involve(c, involution_of(kind));
    if ((c - mirrored).abs() > kScalarTol * n)
        throw NormalizeError("form value violates the case symmetry");
}

/// Unit q with conj(q) p q = i for a unit pure quaternion p.
Scalar rotate_to_i(const Scalar& p) {
    const Scalar q0 = Scalar(1.0) - p * kI;
    if (q0.abs() < 1e-6)
        return kJ; // p = -i
    return q0 * (1.0 / q0.abs());
}

Complex sqrt_inverse(Complex z) { return 1.0 / std::sqrt(z); }

} // namespace

std::vector<FormScalar> reachable_scalars(const Scalar& c, RescaleConstraint constraint, CaseKind kind) {
    require_admissible_value(c, kind);
    const double n = c.abs();
    const bool has_j = c.z2() != Complex{} && std::abs(c.z2()) > kScalarTol * n;
    switch (kind) {
    case CaseKind::c1: return {c.a > 0 ? FormScalar::PlusOne : FormScalar::MinusOne};
    case CaseKind::c2:
        if (constraint == RescaleConstraint::FullH)
            return {FormScalar::PlusOne, FormScalar::MinusOne, FormScalar::PlusJ};
        if (!has_j)
            return {c.a > 0 ? FormScalar::PlusOne : FormScalar::MinusOne};
        if (std::abs(c.a) <= kScalarTol * n)
            return {FormScalar::PlusJ};
        return {};
    case CaseKind::c3:
        if (constraint == RescaleConstraint::FullH)
            return {FormScalar::PlusI, FormScalar::MinusI, FormScalar::PlusJ};
        if (!has_j)
            return {c.b > 0 ? FormScalar::PlusI : FormScalar::MinusI};
        if (std::abs(c.b) <= kScalarTol * n)
            return {FormScalar::PlusJ};
        return {};
    case CaseKind::c4: return {c.b > 0 ? FormScalar::PlusI : FormScalar::MinusI};
    default: break;
    }
    return {};
}

Normalization scalar_orbit_normalize(const Scalar& c, RescaleConstraint constraint, CaseKind kind) {
    require_admissible_value(c, kind);
    const double n = c.abs();
    const bool has_j = std::abs(c.z2()) > kScalarTol * n;
    switch (kind) {
    case CaseKind::c1:
        return {c.a > 0 ? FormScalar::PlusOne : FormScalar::MinusOne, Scalar(1.0 / std::sqrt(std::abs(c.a)))};
    case CaseKind::c4:
        return {c.b > 0 ? FormScalar::PlusI : FormScalar::MinusI, Scalar(1.0 / std::sqrt(std::abs(c.b)))};
    case CaseKind::c2:
        if (constraint == RescaleConstraint::FullH) {
            // hat(q) c q = -i conj(q) (i c) q; rotate p = i c onto i.
            const Scalar p = kI * c;
            const double np = p.abs();
            return {FormScalar::PlusOne, rotate_to_i(p * (1.0 / np)) * (1.0 / std::sqrt(np))};
        }
        if (!has_j)
            return {c.a > 0 ? FormScalar::PlusOne : FormScalar::MinusOne, Scalar(1.0 / std::sqrt(std::abs(c.a)))};
        if (std::abs(c.a) <= kScalarTol * n)
            return {FormScalar::PlusJ, Scalar(std::conj(sqrt_inverse(c.z2())))};
        throw NormalizeError("form value mixes real and j parts; no complex rescaling reaches the catalog");
    case CaseKind::c3:
        if (constraint == RescaleConstraint::FullH)
            return {FormScalar::PlusI, rotate_to_i(c * (1.0 / n)) * (1.0 / std::sqrt(n))};
        if (!has_j)
            return {c.b > 0 ? FormScalar::PlusI : FormScalar::MinusI, Scalar(1.0 / std::sqrt(std::abs(c.b)))};
        if (std::abs(c.b) <= kScalarTol * n)
            return {FormScalar::PlusJ, Scalar(std::conj(sqrt_inverse(c.z2())))};
        throw NormalizeError("form value mixes i and j parts; no complex rescaling reaches the catalog");
    default: break;
    }
    throw NormalizeError("no catalog scalar reachable");
}

// ---------------------------------------------------------------------------
// Block matrices

namespace {

Mat two_by_two(Scalar a, Scalar b, Scalar c, Scalar d) {
    Mat m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

/// 2x2 form pattern of a two-block.
Mat hyperbolic_pattern(int off_sign, CaseKind kind) {
    if (off_sign > 0)
        return two_by_two(0.0, 1.0, 1.0, 0.0);
    if (kind == CaseKind::a3)
        return two_by_two(0.0, 1.0, -1.0, 0.0);
    return two_by_two(0.0, -1.0, 1.0, 0.0);
}

Mat kron_identity2(const Mat& m) {
    Mat out(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(2 * i, 2 * j) = m(i, j);
            out(2 * i + 1, 2 * j + 1) = m(i, j);
        }
    return out;
}

} // namespace

std::pair<Mat, Mat> block_matrices(const CanonicalBlock& b, CaseTag c) {
    const Complex vx = b.index.value();
    if (b.kind == BlockKind::One) {
        const Scalar s = value_of(b.scalar);
        if (!b.realified) {
            Mat a(1, 1), f(1, 1);
            a(0, 0) = Scalar(vx);
            f(0, 0) = s;
            return {a, f};
        }
        Mat f = c.kind == CaseKind::b2 ? two_by_two(0.0, -1.0, 1.0, 0.0) * s : Mat::identity(2) * s;
        return {Mat::from_real(realify(vx)), f};
    }
    const Complex vp = b.partner.value();
    if (!b.realified) {
        const Scalar diag[] = {Scalar(vx), Scalar(vp)};
        return {Mat::diagonal(diag), hyperbolic_pattern(b.off_sign, c.kind)};
    }
    if (b.rule == PartnerRule::PowR)
        return {Mat::from_real(realify(vx)), two_by_two(0.0, 1.0, 1.0, 0.0)};
    const Mat parts[] = {Mat::from_real(realify(vx)), Mat::from_real(realify(vp))};
    const Mat pattern = b.off_sign > 0 ? two_by_two(0.0, 1.0, 1.0, 0.0) : two_by_two(0.0, -1.0, 1.0, 0.0);
    return {block_diag(parts), kron_identity2(pattern)};
}

std::pair<Mat, Mat> block_matrices(const CanonicalForm& cf) {
    std::vector<Mat> as, fs;
    as.reserve(cf.blocks.size());
    fs.reserve(cf.blocks.size());
    for (const auto& b : cf.blocks) {
        auto [a, f] = block_matrices(b, cf.case_tag);
        as.push_back(std::move(a));
        fs.push_back(std::move(f));
    }
    return {block_diag(as), block_diag(fs)};
}

} // namespace rcanon
