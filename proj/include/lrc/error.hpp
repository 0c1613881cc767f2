#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrc {

enum class Errc {
    // gf
    NotPrime,
    FieldTooLarge,
    DivisionByZero,
    FieldMismatch,
    NotTowerField,
    GcdNotOne,
    NotRootOfUnity,
    CoefficientNotInBase,
    DivisionByZeroPolynomial,
    // code_core
    RaggedRows,
    BadCoordinate,
    AllOneAlreadyPresent,
    EnumerationTooLarge,
    InconsistentInput,
    NonIntegerOutput,
    ZeroCode,
    SearchTooLarge,
    // constructions
    NotADivisor,
    NotAnOvoid,
    WrongFieldForm,
    NotMaximalArc,
    BadParameters,
    FamilyUnavailableForParameters,
    HypothesisViolated,
    // locality
    TrivialCode,
    NotARepairSet,
    BadLocality,
    DichotomyViolated,
    PairingFailed,
    // cli
    UnknownFamily,
    BadParams,
    // bad input files, internal assertion failures
    ParseError,
    Internal,
};

std::string_view errc_name(Errc code);

/// True for the errors that mean "this computation is beyond the configured caps"
/// rather than "this input is wrong".
constexpr bool is_cap_error(Errc code) {
    return code == Errc::EnumerationTooLarge || code == Errc::SearchTooLarge ||
           code == Errc::FieldTooLarge;
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }
    bool is_cap() const noexcept { return is_cap_error(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace lrc
