#pragma once

#include <stdexcept>
#include <string>

namespace locring {

enum class ErrorKind {
    DivisionByZero,
    DescriptorMismatch,
    UnsupportedAutomorphism,
    UnsupportedField,
    NotIrreducible,
    NotMonic,
    RingMismatch,
    NotAUnit,
    BadTarget,
    NotWellDefined,
    InexactDivision,
    NotSeparable,
    NotAMorphism,
    DegreeMismatch,
    CriterionDisagreement,
    TooLarge,
    ParseError,
    InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and is what the
/// CLI and the Python bindings report; the message is for humans.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace locring
