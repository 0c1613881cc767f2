#include "lrc/error.hpp"

#include "lrc/caps.hpp"

#include <cstdlib>
#include <string>

namespace lrc {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotTowerField: return "NotTowerField";
        case Errc::GcdNotOne: return "GcdNotOne";
        case Errc::NotRootOfUnity: return "NotRootOfUnity";
        case Errc::CoefficientNotInBase: return "CoefficientNotInBase";
        case Errc::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
        case Errc::RaggedRows: return "RaggedRows";
        case Errc::BadCoordinate: return "BadCoordinate";
        case Errc::AllOneAlreadyPresent: return "AllOneAlreadyPresent";
        case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
        case Errc::InconsistentInput: return "InconsistentInput";
        case Errc::NonIntegerOutput: return "NonIntegerOutput";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::SearchTooLarge: return "SearchTooLarge";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::NotAnOvoid: return "NotAnOvoid";
        case Errc::WrongFieldForm: return "WrongFieldForm";
        case Errc::NotMaximalArc: return "NotMaximalArc";
        case Errc::BadParameters: return "BadParameters";
        case Errc::FamilyUnavailableForParameters: return "FamilyUnavailableForParameters";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::TrivialCode: return "TrivialCode";
        case Errc::NotARepairSet: return "NotARepairSet";
        case Errc::BadLocality: return "BadLocality";
        case Errc::DichotomyViolated: return "DichotomyViolated";
        case Errc::PairingFailed: return "PairingFailed";
        case Errc::UnknownFamily: return "UnknownFamily";
        case Errc::BadParams: return "BadParams";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

std::uint64_t parse_amount(std::string_view text) {
    auto to_u64 = [&](std::string_view s) -> std::uint64_t {
        if (s.empty()) fail(Errc::BadParams, "empty cap value");
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') fail(Errc::BadParams, "bad cap value '" + std::string(text) + "'");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    };
    auto caret = text.find('^');
    if (caret == std::string_view::npos) return to_u64(text);
    std::uint64_t base = to_u64(text.substr(0, caret));
    std::uint64_t exp = to_u64(text.substr(caret + 1));
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (v > (std::uint64_t{1} << 62) / (base ? base : 1)) fail(Errc::BadParams, "cap value overflows");
        v *= base;
    }
    return v;
}

}  // namespace

Caps parse_caps(std::string_view spec) {
    Caps caps;
    while (!spec.empty()) {
        auto comma = spec.find(',');
        auto item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string_view::npos) fail(Errc::BadParams, "cap entry needs key:value");
        auto key = item.substr(0, colon);
        auto value = parse_amount(item.substr(colon + 1));
        if (key == "enum" || key == "enumeration")
            caps.enumeration = value;
        else if (key == "search")
            caps.search = value;
        else
            fail(Errc::BadParams, "unknown cap key '" + std::string(key) + "'");
    }
    return caps;
}

const Caps& default_caps() {
    static const Caps caps = [] {
        const char* env = std::getenv("LOCALITY_LAB_CAPS");
        return env ? parse_caps(env) : Caps{};
    }();
    return caps;
}

}  // namespace lrc
