#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rcanon/canon.hpp"

namespace rcanon {

struct PairContext {
    FieldTag field = FieldTag::C;
    InvolutionTag involution = InvolutionTag::Identity;
    int epsilon = 1;
    int r = 2;

    friend bool operator==(const PairContext&, const PairContext&) = default;
};

struct Tolerances {
    double relation = 1e-8;
    double snap = 1e-6;
    double rank = 1e-9;

    friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct MatrixPair {
    Mat a;
    Mat f;
    PairContext context;
    Tolerances tolerances;

    /// Throws UnsupportedContext / ContextError.
    CaseTag case_tag() const;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    bool derived = false;
    std::string message;
};

/// Checks in order: square, context, entries_in_field, F_nonsingular,
/// F_symmetry, A_nonsingular_if_r_negative, relation, A_r2 (derived).
struct ValidationReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(std::string_view name) const;
    /// Names of the failed checks, comma separated.
    std::string failures() const;
};

/// Relative tolerance of the derived A^{r^2} = A check. A looser relation
/// tolerance loosens it too, so the cross-check never contradicts the relation.
inline constexpr double kPowerCheckTol = 1e-7;

ValidationReport validate_pair(const MatrixPair& pair);

/// Throws ValidationError carrying the failed checks.
void require_valid(const MatrixPair& pair);

struct GeneratorSpec {
    CaseTag case_tag;
    /// Explicit blocks; when empty, blocks are sampled up to `dimension`.
    std::vector<CanonicalBlock> blocks;
    int dimension = 4;
    double cond_bound = 100.0;
    Tolerances tolerances;
};

struct GeneratedInstance {
    MatrixPair pair;
    CanonicalForm ground_truth;
    Mat s_used;
};

/// Context of a case (epsilon, involution, field).
PairContext context_of(CaseTag c);

/// Throws AdmissibilityError unless `b` is one of the case's catalog templates.
void require_admissible(const CanonicalBlock& b, CaseTag c);

/// (S^{-1} A_can S, S^st F_can S) for sampled or requested blocks and a random
/// S with condition number below the bound. Throws AdmissibilityError.
GeneratedInstance random_instance(const GeneratorSpec& spec, std::mt19937_64& rng);

/// Random matrix over the field with standard normal components.
Mat random_matrix(std::size_t rows, std::size_t cols, FieldTag field, std::mt19937_64& rng);

/// Random nonsingular matrix with condition number at most `bound`.
Mat random_conditioned(std::size_t n, FieldTag field, double bound, std::mt19937_64& rng);

/// Canonical-form comparison. Throws ContextMismatch, ValidationError and
/// canonicalization errors.
bool equivalent(const MatrixPair& p1, const MatrixPair& p2);

/// Every admissible block template of the case, in canonical order.
std::vector<CanonicalBlock> catalog(CaseTag c);

} // namespace rcanon
