#include "rcanon/instance.hpp"

#include <algorithm>
#include <cmath>

#include "rcanon/errors.hpp"

namespace rcanon {

CaseTag MatrixPair::case_tag() const {
    require_exponent(context.r);
    return classify_case(context.field, context.involution, context.epsilon, context.r);
}

bool ValidationReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::string ValidationReport::failures() const {
    std::string out;
    for (const auto& c : checks)
        if (!c.passed) {
            if (!out.empty())
                out += ", ";
            out += c.name;
            if (!c.message.empty())
                out += " (" + c.message + ")";
        }
    return out;
}

namespace {

double inverse_condition(const Mat& m) {
    if (m.rows() == 0)
        return 1.0;
    const Eigen::VectorXd s = singular_values(m);
    const double top = s.maxCoeff();
    return top > 0.0 ? s.minCoeff() / top : 0.0;
}

bool entries_in(const Mat& m, FieldTag field) {
    return std::all_of(m.data().begin(), m.data().end(), [field](const Scalar& x) { return in_field(x, field); });
}

} // namespace

ValidationReport validate_pair(const MatrixPair& pair) {
    ValidationReport rep;
    auto& checks = rep.checks;
    const Mat& a = pair.a;
    const Mat& f = pair.f;
    const auto& ctx = pair.context;
    const auto& tol = pair.tolerances;

    const bool square = a.square() && f.square() && a.rows() == f.rows();
    checks.push_back({"square", square, 0.0, false, square ? "" : "A and F must be square of equal size"});
    if (!square)
        return rep;

    try {
        (void)pair.case_tag();
        checks.push_back({"context", true, 0.0, false, ""});
    } catch (const Error& e) {
        checks.push_back({"context", false, 0.0, false, e.what()});
        return rep;
    }

    const bool in_field = entries_in(a, ctx.field) && entries_in(f, ctx.field);
    checks.push_back({"entries_in_field", in_field, 0.0, false, in_field ? "" : "entry outside the field"});
    if (!in_field)
        return rep;

    const double f_icond = inverse_condition(f);
    const bool f_ok = f_icond > tol.rank;
    checks.push_back({"F_nonsingular", f_ok, f_icond, false, f_ok ? "" : "F singular"});

    const double f_norm = std::max(f.norm(), 1e-300);
    const double sym = (st_transpose(f, ctx.involution) - static_cast<double>(ctx.epsilon) * f).norm() / f_norm;
    checks.push_back({"F_symmetry", sym <= tol.relation, sym, false, sym <= tol.relation ? "" : "F^st != eps F"});

    bool a_ok = true;
    double a_icond = 1.0;
    if (ctx.r < 0) {
        a_icond = inverse_condition(a);
        a_ok = a_icond > tol.rank;
    }
    checks.push_back({"A_nonsingular_if_r_negative", a_ok, a_icond, false, a_ok ? "" : "A singular with r < 0"});

    try {
        if (!a_ok)
            throw SingularError("A singular");
        const double scale = f_norm * std::pow(std::max(1.0, a.norm()), std::abs(ctx.r));
        const double rel = (st_transpose(a, ctx.involution) * f - f * power(a, ctx.r)).norm() / scale;
        const bool ok = std::isfinite(rel) && rel <= tol.relation;
        checks.push_back({"relation", ok, rel, false, ok ? "" : "A^st F != F A^r"});
    } catch (const Error& e) {
        checks.push_back({"relation", false, 0.0, false, e.what()});
    }

    const double a_norm = a.norm();
    const double pw = a_norm > 0.0 ? (power(a, ctx.r * ctx.r) - a).norm() / a_norm : 0.0;
    const bool pw_ok = std::isfinite(pw) && pw <= std::max(kPowerCheckTol, tol.relation);
    checks.push_back({"A_r2", pw_ok, pw, true, pw_ok ? "" : "A^(r^2) != A"});
    return rep;
}

void require_valid(const MatrixPair& pair) {
    const ValidationReport rep = validate_pair(pair);
    if (!rep.passed())
        throw ValidationError("pair fails validation: " + rep.failures());
}

PairContext context_of(CaseTag c) {
    return {field_of(c.kind), involution_of(c.kind), epsilon_of(c.kind), c.r};
}

// ---------------------------------------------------------------------------

namespace {

void push_signs(std::vector<CanonicalBlock>& out, EigIndex x, bool imaginary, bool realified = false) {
    out.push_back(CanonicalBlock::one(x, imaginary ? FormScalar::PlusI : FormScalar::PlusOne, realified));
    out.push_back(CanonicalBlock::one(x, imaginary ? FormScalar::MinusI : FormScalar::MinusOne, realified));
}

void complex_templates(EigIndex x, CaseTag c, std::vector<CanonicalBlock>& out) {
    const bool sesqui = c.kind == CaseKind::a2;
    const EigIndex y = pairing_image(x, c);
    const PartnerRule rule = sesqui ? PartnerRule::ConjPowR : PartnerRule::PowR;
    if (c.kind == CaseKind::a3) {
        if (x <= y)
            out.push_back(CanonicalBlock::two(x, rule, y, -1));
        return;
    }
    if (y == x) {
        if (sesqui)
            push_signs(out, x, false);
        else
            out.push_back(CanonicalBlock::one(x, FormScalar::PlusOne));
    } else if (x < y) {
        out.push_back(CanonicalBlock::two(x, rule, y, 1));
    }
}

void real_templates(EigIndex x, CaseTag c, std::vector<CanonicalBlock>& out) {
    const bool skew = c.kind == CaseKind::b2;
    if (x.is_real()) {
        if (skew)
            out.push_back(CanonicalBlock::two(x, PartnerRule::PowR, x, -1));
        else
            push_signs(out, x, false);
        return;
    }
    if (x != orbit_rep(x, c))
        return;
    const SelfPairing sp = self_pairing(x, c.r);
    if (sp.pow_fixed) {
        if (skew)
            out.push_back(CanonicalBlock::two(x, PartnerRule::ConjPowR, idx_conj(x), -1, true));
        else
            out.push_back(CanonicalBlock::two(x, PartnerRule::PowR, x, 1, true));
    } else if (sp.conj_pow_fixed) {
        push_signs(out, x, false, true);
    } else {
        out.push_back(CanonicalBlock::two(x, PartnerRule::ConjPowR, idx_conj(idx_pow_r(x, c.r)), skew ? -1 : 1, true));
    }
}

void quaternion_templates(EigIndex x, CaseTag c, std::vector<CanonicalBlock>& out) {
    const bool skew = epsilon_of(c.kind) < 0;
    if (x.is_real()) {
        switch (c.kind) {
        case CaseKind::c1: push_signs(out, x, false); break;
        case CaseKind::c2: out.push_back(CanonicalBlock::one(x, FormScalar::PlusOne)); break;
        case CaseKind::c3: out.push_back(CanonicalBlock::one(x, FormScalar::PlusI)); break;
        default: push_signs(out, x, true); break;
        }
        return;
    }
    if (!x.is_upper() || x != orbit_rep(x, c))
        return;
    const SelfPairing sp = self_pairing(x, c.r);
    if (sp.conj_pow_fixed) {
        push_signs(out, x, skew);
    } else if (sp.pow_fixed) {
        if (c.kind == CaseKind::c2 || c.kind == CaseKind::c3)
            out.push_back(CanonicalBlock::one(x, FormScalar::PlusJ));
        else
            out.push_back(CanonicalBlock::two(x, PartnerRule::ConjPowR, idx_conj(x), c.kind == CaseKind::c1 ? 1 : -1));
    } else {
        out.push_back(CanonicalBlock::two(x, PartnerRule::ConjPowR, idx_conj(idx_pow_r(x, c.r)), skew ? -1 : 1));
    }
}

} // namespace

std::vector<CanonicalBlock> catalog(CaseTag c) {
    const int m = root_modulus(c.r);
    std::vector<EigIndex> indices;
    if (c.r >= 2)
        indices.push_back(EigIndex::zero());
    for (int k = 0; k < m; ++k)
        indices.push_back(EigIndex::root(k, m));
    std::vector<CanonicalBlock> out;
    for (const auto& x : indices) {
        switch (field_of(c.kind)) {
        case FieldTag::C: complex_templates(x, c, out); break;
        case FieldTag::R: real_templates(x, c, out); break;
        case FieldTag::H: quaternion_templates(x, c, out); break;
        }
    }
    std::stable_sort(out.begin(), out.end(), block_less);
    return out;
}

void require_admissible(const CanonicalBlock& b, CaseTag c) {
    const auto cat = catalog(c);
    if (std::find(cat.begin(), cat.end(), b) == cat.end())
        throw AdmissibilityError("block " + b.to_string() + " is not in the " + std::string(to_string(c.kind)) +
                                 " catalog for r=" + std::to_string(c.r));
}

// ---------------------------------------------------------------------------

Mat random_matrix(std::size_t rows, std::size_t cols, FieldTag field, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Scalar& x = m(i, j);
            x.a = normal(rng);
            if (field != FieldTag::R)
                x.b = normal(rng);
            if (field == FieldTag::H) {
                x.c = normal(rng);
                x.d = normal(rng);
            }
        }
    return m;
}

Mat random_conditioned(std::size_t n, FieldTag field, double bound, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Mat s = random_matrix(n, n, field, rng);
        if (n == 0 || condition_number(s) <= bound)
            return s;
    }
    throw AdmissibilityError("no random matrix met the condition bound " + std::to_string(bound));
}

GeneratedInstance random_instance(const GeneratorSpec& spec, std::mt19937_64& rng) {
    const CaseTag c = spec.case_tag;
    require_exponent(c.r);
    if (!(spec.cond_bound >= 1.0))
        throw AdmissibilityError("condition bound must be at least 1");
    std::vector<CanonicalBlock> blocks = spec.blocks;
    if (!blocks.empty()) {
        for (const auto& b : blocks)
            require_admissible(b, c);
    } else {
        const auto templates = catalog(c);
        int remaining = spec.dimension;
        while (remaining > 0) {
            std::vector<const CanonicalBlock*> fits;
            for (const auto& t : templates)
                if (t.dimension() <= remaining)
                    fits.push_back(&t);
            if (fits.empty())
                break;
            std::uniform_int_distribution<std::size_t> pick(0, fits.size() - 1);
            blocks.push_back(*fits[pick(rng)]);
            remaining -= blocks.back().dimension();
        }
    }

    GeneratedInstance out;
    out.ground_truth.case_tag = c;
    out.ground_truth.blocks = blocks;
    out.ground_truth.sort();

    std::shuffle(blocks.begin(), blocks.end(), rng);
    CanonicalForm shuffled{c, blocks};
    const auto [a_can, f_can] = block_matrices(shuffled);
    const FieldTag field = field_of(c.kind);
    out.s_used = random_conditioned(a_can.rows(), field, spec.cond_bound, rng);
    const Mat s_inv = inverse(out.s_used);
    out.pair.a = s_inv * a_can * out.s_used;
    out.pair.f = st_transpose(out.s_used, involution_of(c.kind)) * f_can * out.s_used;
    out.pair.context = context_of(c);
    out.pair.tolerances = spec.tolerances;
    return out;
}

bool equivalent(const MatrixPair& p1, const MatrixPair& p2) {
    if (p1.context != p2.context)
        throw ContextMismatch("pairs have different contexts");
    if (p1.a.rows() != p2.a.rows())
        return false;
    return canonicalize(p1).form == canonicalize(p2).form;
}

} // namespace rcanon
