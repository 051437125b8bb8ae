#include <doctest.h>

#include "rcanon/batch.hpp"
#include "support.hpp"

using namespace rcanon;

namespace {

std::vector<GeneratorSpec> mixed_specs(int count) {
    const CaseKind kinds[] = {CaseKind::a1, CaseKind::a2, CaseKind::a3, CaseKind::b1, CaseKind::b2,
                              CaseKind::c1, CaseKind::c2, CaseKind::c3, CaseKind::c4};
    const int rs[] = {2, 3, -2, -3};
    std::vector<GeneratorSpec> specs;
    for (int i = 0; i < count; ++i) {
        GeneratorSpec s;
        s.case_tag = {kinds[i % 9], rs[(i / 9) % 4]};
        s.dimension = 1 + i % 8;
        specs.push_back(s);
    }
    return specs;
}

} // namespace

TEST_CASE("parallel generation matches the serial reference") {
    const auto specs = mixed_specs(60);
    const auto serial = generate_batch(specs, 99, Execution::Serial);
    const auto parallel = generate_batch(specs, 99, Execution::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        REQUIRE(serial[i].ok());
        REQUIRE(parallel[i].ok());
        CHECK(serial[i].value->pair.a == parallel[i].value->pair.a);
        CHECK(serial[i].value->pair.f == parallel[i].value->pair.f);
        CHECK(serial[i].value->ground_truth == parallel[i].value->ground_truth);
    }
}

TEST_CASE("parallel validation and canonicalization match the serial reference") {
    const auto specs = mixed_specs(60);
    std::vector<MatrixPair> pairs;
    std::vector<CanonicalForm> truth;
    for (const auto& g : generate_batch(specs, 5, Execution::Serial)) {
        pairs.push_back(g.value->pair);
        truth.push_back(g.value->ground_truth);
    }
    // one invalid item must not disturb the others
    pairs.push_back(testing::make_pair(testing::mat({{2.0}}), testing::mat({{1.0}}), {CaseKind::a1, 2}));

    const auto vs = validate_batch(pairs, Execution::Serial);
    const auto vp = validate_batch(pairs, Execution::Parallel);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        CHECK(vs[i].value->passed() == vp[i].value->passed());
    CHECK_FALSE(vs.back().value->passed());

    const auto cs = canonicalize_batch(pairs, Execution::Serial);
    const auto cp = canonicalize_batch(pairs, Execution::Parallel);
    for (std::size_t i = 0; i < truth.size(); ++i) {
        REQUIRE(cs[i].ok());
        REQUIRE(cp[i].ok());
        CHECK(cs[i].value->form == truth[i]);
        CHECK(cp[i].value->form == truth[i]);
        CHECK(cs[i].value->witness.s == cp[i].value->witness.s);
    }
    CHECK_FALSE(cs.back().ok());
    CHECK(cs.back().error_name == "ValidationError");
    CHECK(cp.back().error_name == "ValidationError");
}

TEST_CASE("item generators are independent of batch layout") {
    auto a = item_rng(3, 7);
    auto b = item_rng(3, 7);
    auto c = item_rng(3, 8);
    CHECK(a() == b());
    CHECK(a() != c());
    CHECK(batch_threads() >= 1);
}
