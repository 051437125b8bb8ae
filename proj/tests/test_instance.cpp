#include <doctest.h>

#include <algorithm>
#include <set>

#include "rcanon/errors.hpp"
#include "support.hpp"

using namespace rcanon;
using testing::make_pair;
using testing::mat;
using testing::root_value;

namespace {

// Brute-force template count for the complex cases: walk k in Z/m with
// numeric powers only.
std::size_t brute_force_count(CaseKind kind, int r) {
    const int m = r * r - 1;
    auto image = [&](Complex z) { return kind == CaseKind::a2 ? std::pow(std::conj(z), r) : std::pow(z, r); };
    auto residue_of = [&](Complex z) {
        for (int k = 0; k < m; ++k)
            if (std::abs(z - root_value(k, m)) < 1e-9)
                return k;
        return -1;
    };
    std::size_t count = r >= 2 ? (kind == CaseKind::a2 ? 2 : 1) : 0; // zero: self-paired in every case
    std::set<int> seen;
    for (int k = 0; k < m; ++k) {
        if (seen.count(k))
            continue;
        const int y = residue_of(image(root_value(k, m)));
        seen.insert(k);
        seen.insert(y);
        if (y == k)
            count += kind == CaseKind::a2 ? 2 : 1;
        else
            count += 1;
    }
    return count;
}

} // namespace

TEST_CASE("catalog counts match brute-force enumeration") {
    CHECK(catalog({CaseKind::a1, 2}).size() == 3);
    CHECK(catalog({CaseKind::a2, 2}).size() == 8);
    for (auto kind : {CaseKind::a1, CaseKind::a2, CaseKind::a3})
        for (int r : {2, 3, 4, 5, -2, -3, -5, 8}) {
            INFO(to_string(kind), " r=", r);
            CHECK(catalog({kind, r}).size() == brute_force_count(kind, r));
        }
}

TEST_CASE("catalog content examples") {
    for (const auto& b : catalog({CaseKind::a2, 2}))
        CHECK(b.kind == BlockKind::One);

    std::set<int> self_paired;
    bool zero = false;
    for (const auto& b : catalog({CaseKind::a2, 3}))
        if (b.kind == BlockKind::One) {
            if (b.index.is_zero())
                zero = true;
            else
                self_paired.insert(b.index.residue());
        }
    CHECK(zero);
    CHECK(self_paired == std::set<int>{0, 2, 4, 6});

    for (const auto& b : catalog({CaseKind::a3, 2}))
        CHECK(b.kind == BlockKind::Two);

    auto has_minus_one = [](CaseTag c) {
        const int m = root_modulus(c.r);
        int n = 0;
        for (const auto& b : catalog(c))
            if (b.kind == BlockKind::One && !b.index.is_zero() && 2 * b.index.residue() == m)
                ++n;
        return n;
    };
    CHECK(has_minus_one({CaseKind::b1, 2}) == 0);
    CHECK(has_minus_one({CaseKind::b1, 3}) == 2);

    const auto b1 = catalog({CaseKind::b1, 3});
    for (auto x : {EigIndex::zero(), EigIndex::root(0, 8), EigIndex::root(4, 8)})
        for (auto s : {FormScalar::PlusOne, FormScalar::MinusOne})
            CHECK(std::count(b1.begin(), b1.end(), CanonicalBlock::one(x, s)) == 1);

    for (const auto& b : catalog({CaseKind::c4, 3}))
        if (b.kind == BlockKind::One)
            CHECK((b.scalar == FormScalar::PlusI || b.scalar == FormScalar::MinusI));
}

TEST_CASE("catalog is closed under orbit identifications") {
    for (auto kind : {CaseKind::a1, CaseKind::a2, CaseKind::a3, CaseKind::b1, CaseKind::b2, CaseKind::c1, CaseKind::c2,
                      CaseKind::c3, CaseKind::c4})
        for (int r : {2, 3, -2, -3}) {
            const CaseTag c{kind, r};
            const auto cat = catalog(c);
            for (const auto& b : cat) {
                // every index of the orbit maps back to the stored representative
                for (const auto& y : index_orbit(b.index, c))
                    CHECK(orbit_rep(y, c) == b.index);
            }
        }
}

TEST_CASE("validate_pair examples") {
    auto ok = validate_pair(make_pair(mat({{1.0}}), mat({{1.0}}), {CaseKind::a2, 3}));
    CHECK(ok.passed());
    for (const auto& c : ok.checks)
        CHECK(c.residual == doctest::Approx(c.name == "F_nonsingular" || c.name == "A_nonsingular_if_r_negative" ? 1.0 : 0.0));

    const Complex w = root_value(1, 3);
    const Scalar d[] = {w, w * w};
    CHECK(validate_pair(make_pair(Mat::diagonal(d), mat({{0.0, 1.0}, {1.0, 0.0}}), {CaseKind::a1, 2})).passed());

    const auto bad = validate_pair(make_pair(mat({{2.0}}), mat({{1.0}}), {CaseKind::a1, 2}));
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.find("relation")->passed);
    CHECK_FALSE(bad.find("A_r2")->passed);
    CHECK(bad.find("A_r2")->derived);
}

TEST_CASE("validate_pair failure modes") {
    const CaseTag a2{CaseKind::a2, 3};
    CHECK_FALSE(validate_pair(make_pair(mat({{1.0}}), mat({{0.0}}), a2)).find("F_nonsingular")->passed);
    CHECK_FALSE(validate_pair(make_pair(mat({{1.0}}), mat({{kI}}), a2)).find("F_symmetry")->passed);
    CHECK_FALSE(validate_pair(make_pair(Mat::identity(2), Mat::identity(3), a2)).passed());
    CHECK_FALSE(validate_pair(make_pair(mat({{kJ}}), mat({{1.0}}), a2)).find("entries_in_field")->passed);

    MatrixPair neg = make_pair(mat({{0.0}}), mat({{1.0}}), {CaseKind::a1, -2});
    const auto rep = validate_pair(neg);
    CHECK_FALSE(rep.find("A_nonsingular_if_r_negative")->passed);

    MatrixPair skew_herm = make_pair(mat({{1.0}}), mat({{kI}}), a2);
    skew_herm.context.epsilon = -1;
    CHECK_FALSE(validate_pair(skew_herm).find("context")->passed);
    CHECK_THROWS_AS(require_valid(skew_herm), ValidationError);
}

TEST_CASE("random_instance examples") {
    std::mt19937_64 rng(40);
    GeneratorSpec spec;
    spec.case_tag = {CaseKind::a2, 2};
    spec.blocks = {CanonicalBlock::one(EigIndex::root(0, 3), FormScalar::PlusOne)};
    const auto g = random_instance(spec, rng);
    CHECK(std::abs(g.pair.a(0, 0).a - 1.0) < 1e-14);
    CHECK(g.pair.f(0, 0).a > 0.0);
    CHECK(std::abs(g.pair.f(0, 0).b) < 1e-14);

    spec.case_tag = {CaseKind::b2, 3};
    spec.blocks = {CanonicalBlock::two(EigIndex::zero(), PartnerRule::PowR, EigIndex::zero(), -1)};
    const auto b2 = random_instance(spec, rng);
    CHECK(b2.pair.a.rows() == 2);
    CHECK(b2.pair.a.is_real());
    CHECK((st_transpose(b2.pair.f, InvolutionTag::Identity) + b2.pair.f).norm() < 1e-12);

    spec.case_tag = {CaseKind::b1, 2};
    spec.blocks = {CanonicalBlock::one(EigIndex::root(1, 3), FormScalar::PlusOne)};
    CHECK_THROWS_AS(random_instance(spec, rng), AdmissibilityError);
    spec.case_tag = {CaseKind::a1, -2};
    spec.blocks = {CanonicalBlock::one(EigIndex::zero(), FormScalar::PlusOne)};
    CHECK_THROWS_AS(random_instance(spec, rng), AdmissibilityError);
}

TEST_CASE("generated instances validate and are reproducible") {
    for (auto kind : {CaseKind::a1, CaseKind::a2, CaseKind::a3, CaseKind::b1, CaseKind::b2, CaseKind::c1, CaseKind::c2,
                      CaseKind::c3, CaseKind::c4})
        for (int r : {2, 3, -2, -3}) {
            GeneratorSpec spec;
            spec.case_tag = {kind, r};
            spec.dimension = 7;
            std::mt19937_64 rng1(7), rng2(7);
            const auto g1 = random_instance(spec, rng1);
            const auto g2 = random_instance(spec, rng2);
            CHECK(g1.pair.a == g2.pair.a);
            CHECK(g1.ground_truth == g2.ground_truth);
            CHECK(condition_number(g1.s_used) <= 100.0);
            const auto rep = validate_pair(g1.pair);
            CHECK(rep.passed());
            CHECK(rep.find("relation")->residual < 1e-7);
            // unscrambled canonical pair is exact to rounding
            const auto [a, f] = block_matrices(g1.ground_truth);
            CHECK(validate_pair(make_pair(a, f, spec.case_tag)).find("relation")->residual < 1e-10);
        }
}

TEST_CASE("equivalent examples") {
    const CaseTag a2{CaseKind::a2, 3};
    const Mat i2 = Mat::identity(2);
    CHECK(equivalent(make_pair(i2, mat({{1.0, 0.0}, {0.0, -1.0}}), a2), make_pair(i2, mat({{-1.0, 0.0}, {0.0, 1.0}}), a2)));
    CHECK_FALSE(equivalent(make_pair(i2, mat({{1.0, 0.0}, {0.0, -1.0}}), a2), make_pair(i2, i2, a2)));
    const CaseTag c2{CaseKind::c2, 3};
    CHECK(equivalent(make_pair(mat({{1.0}}), mat({{1.0}}), c2), make_pair(mat({{1.0}}), mat({{-1.0}}), c2)));
    CHECK_THROWS_AS(equivalent(make_pair(mat({{1.0}}), mat({{1.0}}), a2),
                               make_pair(mat({{1.0}}), mat({{1.0}}), {CaseKind::b1, 3})),
                    ContextMismatch);
}

TEST_CASE("equivalence relation on triples sharing a ground truth") {
    std::mt19937_64 rng(41);
    for (auto kind : {CaseKind::a3, CaseKind::b1, CaseKind::c3})
        for (int t = 0; t < 5; ++t) {
            GeneratorSpec spec;
            spec.case_tag = {kind, 3};
            spec.dimension = 6;
            const auto g = random_instance(spec, rng);
            spec.blocks = g.ground_truth.blocks;
            const auto h = random_instance(spec, rng);
            const auto k = random_instance(spec, rng);
            CHECK(equivalent(g.pair, g.pair));
            CHECK(equivalent(g.pair, h.pair));
            CHECK(equivalent(h.pair, g.pair));
            CHECK(equivalent(h.pair, k.pair));
            CHECK(equivalent(g.pair, k.pair));
        }
}
