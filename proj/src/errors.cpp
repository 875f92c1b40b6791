#include "gpcayley/errors.hpp"

namespace gpcayley {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedTable: return "MalformedTable";
        case ErrorCode::NoIdentity: return "NoIdentity";
        case ErrorCode::NoInverse: return "NoInverse";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::ZeroOrder: return "ZeroOrder";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::EmptyFactorList: return "EmptyFactorList";
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::MissingVertexGroup: return "MissingVertexGroup";
        case ErrorCode::IdentityInGenset: return "IdentityInGenset";
        case ErrorCode::SymmetryViolation: return "SymmetryViolation";
        case ErrorCode::DoesNotGenerate: return "DoesNotGenerate";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::BadElementIndex: return "BadElementIndex";
        case ErrorCode::MalformedWord: return "MalformedWord";
        case ErrorCode::PresentationMismatch: return "PresentationMismatch";
        case ErrorCode::BallTooLarge: return "BallTooLarge";
        case ErrorCode::NotAGraphIso: return "NotAGraphIso";
        case ErrorCode::GraphMismatch: return "GraphMismatch";
        case ErrorCode::NoVertexIso: return "NoVertexIso";
        case ErrorCode::NotAClique: return "NotAClique";
        case ErrorCode::MalformedScenario: return "MalformedScenario";
    }
    return "Error";
}

bool is_validation_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::PresentationMismatch:
        case ErrorCode::BallTooLarge:
        case ErrorCode::NotAGraphIso:
        case ErrorCode::GraphMismatch:
        case ErrorCode::NoVertexIso:
        case ErrorCode::NotAClique:
            return false;
        default:
            return true;
    }
}

} // namespace gpcayley
