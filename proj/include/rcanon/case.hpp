#pragma once

#include <string_view>

#include "rcanon/scalar.hpp"

namespace rcanon {

/// The nine classification contexts, named after the field/form they cover:
/// a = C, b = R, c = H.
enum class CaseKind { a1, a2, a3, b1, b2, c1, c2, c3, c4 };

struct CaseTag {
    CaseKind kind = CaseKind::a1;
    int r = 2;

    friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

std::string_view to_string(CaseKind k);
/// Parses "a1" ... "c4". Throws ParseError.
CaseKind parse_case_kind(std::string_view s);

FieldTag field_of(CaseKind k);
InvolutionTag involution_of(CaseKind k);
/// +1 for symmetric/Hermitian forms, -1 for skew-symmetric/skew-Hermitian.
int epsilon_of(CaseKind k);

/// True when the form is bilinear (identity involution).
bool bilinear(CaseKind k);

/// Largest supported |r|; beyond it root-of-unity gaps drop below 1e-3.
inline constexpr int kMaxAbsR = 64;

/// Throws ContextError unless 2 <= |r| <= kMaxAbsR.
void require_exponent(int r);

/// Maps (field, involution, epsilon) to the case. Complex skew-Hermitian
/// forms are rejected: multiply F by i to get a Hermitian form.
/// Throws UnsupportedContext.
CaseTag classify_case(FieldTag field, InvolutionTag inv, int epsilon, int r);

} // namespace rcanon
