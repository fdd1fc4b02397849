#include "locring/error.hpp"

namespace locring {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
        case ErrorKind::UnsupportedAutomorphism: return "UnsupportedAutomorphism";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::BadTarget: return "BadTarget";
        case ErrorKind::NotWellDefined: return "NotWellDefined";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::NotSeparable: return "NotSeparable";
        case ErrorKind::NotAMorphism: return "NotAMorphism";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::CriterionDisagreement: return "CriterionDisagreement";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace locring
