#include <doctest.h>

#include <map>

#include "rcanon/errors.hpp"
#include "rcanon/spectral.hpp"
#include "support.hpp"

using namespace rcanon;
using testing::dist;
using testing::mat;
using testing::root_value;

namespace {

// Nearest residue to a numeric unit complex number (test-side oracle).
int nearest_residue(Complex z, int m) {
    int best = 0;
    for (int k = 1; k < m; ++k)
        if (std::abs(z - root_value(k, m)) < std::abs(z - root_value(best, m)))
            best = k;
    return best;
}

} // namespace

TEST_CASE("index arithmetic agrees with numeric powers") {
    for (int r : {2, 3, -2, -3, 5, -7}) {
        const int m = root_modulus(r);
        CHECK(m == r * r - 1);
        for (int k = 0; k < m; ++k) {
            const Complex z = root_value(k, m);
            const EigIndex x = EigIndex::root(k, m);
            CHECK(idx_pow_r(x, r).residue() == nearest_residue(std::pow(z, r), m));
            CHECK(idx_conj(x).residue() == nearest_residue(std::conj(z), m));
            CHECK(std::abs(x.value() - z) < 1e-12);
            const SelfPairing sp = self_pairing(x, r);
            CHECK(sp.pow_fixed == (std::abs(std::pow(z, r) - z) < 1e-9));
            CHECK(sp.conj_pow_fixed == (std::abs(std::pow(z, r) - std::conj(z)) < 1e-9));
            // A^{r^2} = A at the level of indices.
            CHECK(idx_pow_r(idx_pow_r(x, r), r) == x);
        }
    }
}

TEST_CASE("special values are exact") {
    const int m = root_modulus(3);
    CHECK(EigIndex::root(0, m).value() == Complex(1.0, 0.0));
    CHECK(EigIndex::root(2, m).value() == Complex(0.0, 1.0));
    CHECK(EigIndex::root(4, m).value() == Complex(-1.0, 0.0));
    CHECK(EigIndex::root(6, m).value() == Complex(0.0, -1.0));
    CHECK(EigIndex::zero().value() == Complex(0.0, 0.0));
}

TEST_CASE("zero index") {
    CHECK(idx_pow_r(EigIndex::zero(), 2).is_zero());
    CHECK_THROWS_AS(idx_pow_r(EigIndex::zero(), -2), SingularError);
    CHECK(admissible(EigIndex::zero(), 3));
    CHECK_FALSE(admissible(EigIndex::zero(), -3));
    CHECK(EigIndex::zero() < EigIndex::root(0, 3));
}

TEST_CASE("pairing images per case") {
    const int r = 3, m = root_modulus(r);
    const EigIndex x = EigIndex::root(1, m);
    CHECK(pairing_image(x, {CaseKind::a1, r}) == EigIndex::root(3, m));
    CHECK(pairing_image(x, {CaseKind::a2, r}) == EigIndex::root(5, m));
    CHECK(pairing_image(x, {CaseKind::b1, r}) == EigIndex::root(3, m));
    // quaternion cases report standardized indices
    CHECK(pairing_image(x, {CaseKind::c1, r}) == EigIndex::root(3, m));
    CHECK(pairing_image(EigIndex::root(2, m), {CaseKind::c2, r}) == EigIndex::root(2, m));
}

TEST_CASE("snapped spectrum over C") {
    std::mt19937_64 rng(20);
    const int r = 3, m = root_modulus(r);
    const Scalar d[] = {root_value(1, m), root_value(1, m), root_value(4, m), 0.0};
    const Mat s = random_conditioned(4, FieldTag::C, 50.0, rng);
    const Mat a = inverse(s) * Mat::diagonal(d) * s;
    const SpectrumReport rep = snap_spectrum(a, FieldTag::C, r);
    CHECK(rep.dimension() == 4);
    CHECK(rep.multiplicity(EigIndex::root(1, m)) == 2);
    CHECK(rep.multiplicity(EigIndex::root(4, m)) == 1);
    CHECK(rep.multiplicity(EigIndex::zero()) == 1);
    CHECK(rep.multiplicity(EigIndex::root(0, m)) == 0);
}

TEST_CASE("real spectrum is closed under conjugation") {
    const int r = 2, m = root_modulus(r);
    const Mat a = Mat::from_real(realify(root_value(1, m)));
    const SpectrumReport rep = snap_spectrum(a, FieldTag::R, r);
    CHECK(rep.multiplicity(EigIndex::root(1, m)) == 1);
    CHECK(rep.multiplicity(EigIndex::root(2, m)) == 1);
}

TEST_CASE("quaternion spectrum is standardized") {
    std::mt19937_64 rng(21);
    const int r = 3, m = root_modulus(r);
    const Scalar d[] = {Complex(0.0, 1.0), Complex(0.0, -1.0), 1.0};
    const Mat s = random_conditioned(3, FieldTag::H, 50.0, rng);
    const Mat a = inverse(s) * Mat::diagonal(d) * s;
    const SpectrumReport rep = snap_spectrum(a, FieldTag::H, r);
    CHECK(rep.multiplicity(EigIndex::root(2, m)) == 2);
    CHECK(rep.multiplicity(EigIndex::root(0, m)) == 1);
    CHECK(rep.dimension() == 3);
}

TEST_CASE("eigenbases satisfy A B = B lambda") {
    std::mt19937_64 rng(22);
    const int r = -3, m = root_modulus(r);
    for (auto field : {FieldTag::C, FieldTag::R, FieldTag::H}) {
        Mat a;
        if (field == FieldTag::R) {
            const Mat parts[] = {Mat::from_real(realify(root_value(1, m))), Mat::identity(2) * Scalar(-1.0)};
            const Mat s = random_conditioned(4, field, 50.0, rng);
            a = inverse(s) * block_diag(parts) * s;
        } else {
            const Scalar d[] = {root_value(1, m), root_value(1, m), -1.0, -1.0};
            const Mat s = random_conditioned(4, field, 50.0, rng);
            a = inverse(s) * Mat::diagonal(d) * s;
        }
        const SpectralDecomposition sd(a, field, r);
        for (const auto& e : sd.report().entries) {
            const Mat b = sd.eigenbasis(e.index);
            CHECK(b.cols() == static_cast<std::size_t>(e.multiplicity));
            CHECK(dist(a * b, b * Scalar(e.index.value())) < 1e-9 * std::max(1.0, b.norm()));
            if (field == FieldTag::R && e.index.is_real())
                CHECK(b.is_real());
        }
    }
}

TEST_CASE("spectral errors") {
    CHECK_THROWS_AS(snap_spectrum(mat({{2.0}}), FieldTag::C, 2), SnapError);
    CHECK_THROWS_AS(snap_spectrum(mat({{1.0, 1.0}, {0.0, 1.0}}), FieldTag::C, 2), NotDiagonalizableError);
    CHECK_THROWS_AS(snap_spectrum(mat({{0.0, 1.0}, {0.0, 0.0}}), FieldTag::C, 2), NotDiagonalizableError);
}

TEST_CASE("quaternion orthonormal basis") {
    std::mt19937_64 rng(23);
    const Mat x = random_matrix(4, 2, FieldTag::H, rng);
    const Mat cols[] = {x, x.col(0) * kJ + x.col(1) * kK};
    const Mat q = quaternion_orthonormal_basis(hcat(cols));
    REQUIRE(q.cols() == 2);
    CHECK(dist(adjoint(q) * q, Mat::identity(2)) < 1e-12);
}
