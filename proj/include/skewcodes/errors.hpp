#pragma once

#include <stdexcept>
#include <string>

namespace skewcodes {

// Failure kinds surfaced by the library. Tests and the CLI dispatch on these
// rather than on message text.
enum class Errc {
    NotPrime,
    EvenPrime,
    ReducibleModulus,
    DegreeMismatch,
    ContextMismatch,
    DivisionByZero,
    DomainMismatch,
    DivisorZero,
    NonInvertibleLead,
    NotRightDivisor,
    NotMonic,
    LengthMismatch,
    EvenLength,
    OutOfEnvelope,
    CapExceeded,
    SearchFailed,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::EvenPrime: return "EvenPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::ContextMismatch: return "ContextMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::DomainMismatch: return "DomainMismatch";
        case Errc::DivisorZero: return "DivisorZero";
        case Errc::NonInvertibleLead: return "NonInvertibleLead";
        case Errc::NotRightDivisor: return "NotRightDivisor";
        case Errc::NotMonic: return "NotMonic";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::EvenLength: return "EvenLength";
        case Errc::OutOfEnvelope: return "OutOfEnvelope";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::SearchFailed: return "SearchFailed";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace skewcodes
