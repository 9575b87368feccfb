#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

/// Base of every error raised by the library. `name()` is the stable
/// identifier printed by the CLI on the diagnostic stream.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define CHARVAR_DEFINE_ERROR(Type)                                          \
    class Type : public Error {                                             \
    public:                                                                 \
        explicit Type(const std::string& what) : Error(#Type, what) {}      \
    }

// poly
CHARVAR_DEFINE_ERROR(NotDivisible);
CHARVAR_DEFINE_ERROR(DivisionByZero);
CHARVAR_DEFINE_ERROR(NonIntegerResult);

// series / plethystic
CHARVAR_DEFINE_ERROR(OrderMismatch);
CHARVAR_DEFINE_ERROR(NonUnitConstantTerm);
CHARVAR_DEFINE_ERROR(NonZeroConstantTerm);

// fforacle
CHARVAR_DEFINE_ERROR(TooLarge);
CHARVAR_DEFINE_ERROR(NonIntegerOrbitCount);
CHARVAR_DEFINE_ERROR(UnsupportedField);

// partition expressions
CHARVAR_DEFINE_ERROR(SyntaxError);
CHARVAR_DEFINE_ERROR(SumMismatch);
CHARVAR_DEFINE_ERROR(ZeroPart);

// argument validation shared by all modules
CHARVAR_DEFINE_ERROR(InvalidArgument);

#undef CHARVAR_DEFINE_ERROR

}  // namespace charvar
