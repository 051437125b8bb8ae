#include "rcanon/case.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include "rcanon/errors.hpp"

namespace rcanon {

namespace {

constexpr std::array<std::string_view, 9> kNames{"a1", "a2", "a3", "b1", "b2", "c1", "c2", "c3", "c4"};

} // namespace

std::string_view to_string(CaseKind k) { return kNames[static_cast<std::size_t>(k)]; }

CaseKind parse_case_kind(std::string_view s) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == s)
            return static_cast<CaseKind>(i);
    throw ParseError("unknown case tag '" + std::string(s) + "'");
}

FieldTag field_of(CaseKind k) {
    switch (k) {
    case CaseKind::a1:
    case CaseKind::a2:
    case CaseKind::a3: return FieldTag::C;
    case CaseKind::b1:
    case CaseKind::b2: return FieldTag::R;
    default: return FieldTag::H;
    }
}

InvolutionTag involution_of(CaseKind k) {
    switch (k) {
    case CaseKind::a2: return InvolutionTag::ComplexConj;
    case CaseKind::c1:
    case CaseKind::c3: return InvolutionTag::QuatConj;
    case CaseKind::c2:
    case CaseKind::c4: return InvolutionTag::QuatSemiconj;
    default: return InvolutionTag::Identity;
    }
}

int epsilon_of(CaseKind k) {
    switch (k) {
    case CaseKind::a3:
    case CaseKind::b2:
    case CaseKind::c3:
    case CaseKind::c4: return -1;
    default: return 1;
    }
}

bool bilinear(CaseKind k) { return involution_of(k) == InvolutionTag::Identity; }

void require_exponent(int r) {
    if (std::abs(r) < 2 || std::abs(r) > kMaxAbsR)
        throw ContextError("exponent r=" + std::to_string(r) + " outside 2 <= |r| <= " + std::to_string(kMaxAbsR));
}

CaseTag classify_case(FieldTag field, InvolutionTag inv, int epsilon, int r) {
    if (epsilon != 1 && epsilon != -1)
        throw UnsupportedContext("form symmetry epsilon must be +1 or -1");
    if (!legal(field, inv))
        throw UnsupportedContext("involution '" + std::string(to_string(inv)) + "' is not legal over " +
                                 std::string(to_string(field)));
    CaseKind kind{};
    switch (field) {
    case FieldTag::C:
        if (inv == InvolutionTag::Identity)
            kind = epsilon == 1 ? CaseKind::a1 : CaseKind::a3;
        else if (epsilon == 1)
            kind = CaseKind::a2;
        else
            throw UnsupportedContext("skew-Hermitian forms over C are not a separate context; "
                                     "replace F by iF, which is Hermitian");
        break;
    case FieldTag::R: kind = epsilon == 1 ? CaseKind::b1 : CaseKind::b2; break;
    case FieldTag::H:
        if (inv == InvolutionTag::QuatConj)
            kind = epsilon == 1 ? CaseKind::c1 : CaseKind::c3;
        else
            kind = epsilon == 1 ? CaseKind::c2 : CaseKind::c4;
        break;
    }
    return {kind, r};
}

} // namespace rcanon
