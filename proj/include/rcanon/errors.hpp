#pragma once

#include <stdexcept>
#include <string>

namespace rcanon {

/// Base of every error raised by the library. `name()` is the stable
/// identifier printed by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define RCANON_DEFINE_ERROR(Type)                                      \
    class Type : public Error {                                        \
    public:                                                            \
        explicit Type(const std::string& what) : Error(#Type, what) {} \
    }

RCANON_DEFINE_ERROR(ContextError);
RCANON_DEFINE_ERROR(UnsupportedContext);
RCANON_DEFINE_ERROR(ContextMismatch);
RCANON_DEFINE_ERROR(SingularError);
RCANON_DEFINE_ERROR(SymmetryError);
RCANON_DEFINE_ERROR(SnapError);
RCANON_DEFINE_ERROR(NotDiagonalizableError);
RCANON_DEFINE_ERROR(RankError);
RCANON_DEFINE_ERROR(PairingDimensionMismatch);
RCANON_DEFINE_ERROR(DeflationStall);
RCANON_DEFINE_ERROR(NormalizeError);
RCANON_DEFINE_ERROR(AdmissibilityError);
RCANON_DEFINE_ERROR(ValidationError);
RCANON_DEFINE_ERROR(WitnessError);
RCANON_DEFINE_ERROR(ParseError);

#undef RCANON_DEFINE_ERROR

} // namespace rcanon
