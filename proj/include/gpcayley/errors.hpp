#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpcayley {

// Every failure the library reports, by contract name. Validation codes are
// violations of input data (group axioms, graph shape, generating sets,
// scenario files, word syntax); construction codes are operations that cannot
// produce their result on otherwise valid inputs.
enum class ErrorCode {
    // finite groups
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAssociative,
    ZeroOrder,
    TooLarge,
    EmptyFactorList,
    // simplicial graphs
    DuplicateVertex,
    UnknownEndpoint,
    LoopEdge,
    // presentations
    MissingVertexGroup,
    IdentityInGenset,
    SymmetryViolation,
    DoesNotGenerate,
    // words
    UnknownVertex,
    BadElementIndex,
    MalformedWord,
    PresentationMismatch,
    // balls
    BallTooLarge,
    // isomorphism transport
    NotAGraphIso,
    GraphMismatch,
    NoVertexIso,
    // clique certificates
    NotAClique,
    // scenario files
    MalformedScenario,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& detail) {
    throw Error(code, detail);
}

// True when the failure means the input data itself is invalid, as opposed to
// a construction that cannot be carried out. The CLI maps the former to exit
// code 2 and the latter to exit code 3.
bool is_validation_error(ErrorCode code);

} // namespace gpcayley
