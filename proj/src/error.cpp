#include "changekit/error.hpp"

namespace changekit {

std::string_view to_string(DomainErrorKind kind) noexcept {
    switch (kind) {
        case DomainErrorKind::NonFinite: return "NonFinite";
        case DomainErrorKind::NonPositive: return "NonPositive";
        case DomainErrorKind::Negative: return "Negative";
        case DomainErrorKind::GrowthOnly: return "GrowthOnly";
        case DomainErrorKind::StagnantPair: return "StagnantPair";
        case DomainErrorKind::EqualPastValues: return "EqualPastValues";
        case DomainErrorKind::SignMismatch: return "SignMismatch";
        case DomainErrorKind::InvalidConstructedPair: return "InvalidConstructedPair";
        case DomainErrorKind::SingularParameter: return "SingularParameter";
        case DomainErrorKind::OutOfRange: return "OutOfRange";
    }
    return "DomainError";
}

}  // namespace changekit
