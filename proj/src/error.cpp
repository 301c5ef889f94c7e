#include "longcycle/error.hpp"

namespace longcycle {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidRotation: return "InvalidRotation";
        case ErrorCode::AsymmetricRotation: return "AsymmetricRotation";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NotPlanarEmbedding: return "NotPlanarEmbedding";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotACEdgeOfFace: return "NotACEdgeOfFace";
        case ErrorCode::CycleTooShort: return "CycleTooShort";
        case ErrorCode::StaleInstance: return "StaleInstance";
        case ErrorCode::InitialCycleInvalid: return "InitialCycleInvalid";
        case ErrorCode::CycleTooShortAtFixpoint: return "CycleTooShortAtFixpoint";
        case ErrorCode::NoInitialCycleFound: return "NoInitialCycleFound";
        case ErrorCode::NotEssentially4Connected: return "NotEssentially4Connected";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::GenerationInvalid: return "GenerationInvalid";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace longcycle
