#include "rcanon/scalar.hpp"

#include "rcanon/errors.hpp"

namespace rcanon {

std::string_view to_string(FieldTag f) {
    switch (f) {
    case FieldTag::R: return "R";
    case FieldTag::C: return "C";
    case FieldTag::H: return "H";
    }
    return "?";
}

std::string_view to_string(InvolutionTag t) {
    switch (t) {
    case InvolutionTag::Identity: return "identity";
    case InvolutionTag::ComplexConj: return "conj";
    case InvolutionTag::QuatConj: return "quatconj";
    case InvolutionTag::QuatSemiconj: return "quatsemiconj";
    }
    return "?";
}

bool legal(FieldTag field, InvolutionTag tag) {
    switch (field) {
    case FieldTag::R: return tag == InvolutionTag::Identity;
    case FieldTag::C: return tag == InvolutionTag::Identity || tag == InvolutionTag::ComplexConj;
    case FieldTag::H: return tag == InvolutionTag::QuatConj || tag == InvolutionTag::QuatSemiconj;
    }
    return false;
}

void require_legal(FieldTag field, InvolutionTag tag) {
    if (!legal(field, tag))
        throw ContextError("involution '" + std::string(to_string(tag)) + "' is not an involution of field " +
                           std::string(to_string(field)));
}

bool in_field(const Scalar& x, FieldTag field) {
    switch (field) {
    case FieldTag::R: return x.is_real();
    case FieldTag::C: return x.is_complex();
    case FieldTag::H: return true;
    }
    return false;
}

Scalar involve(const Scalar& x, InvolutionTag tag) {
    switch (tag) {
    case InvolutionTag::Identity:
        if (!x.is_complex())
            throw ContextError("identity involution applied to a non-complex quaternion");
        return x;
    case InvolutionTag::ComplexConj:
        if (!x.is_complex())
            throw ContextError("complex conjugation applied to a non-complex quaternion");
        return {x.a, -x.b, 0.0, 0.0};
    case InvolutionTag::QuatConj:
        return x.conj();
    case InvolutionTag::QuatSemiconj:
        return {x.a, -x.b, x.c, x.d};
    }
    return x;
}

} // namespace rcanon
