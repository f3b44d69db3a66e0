#pragma once

#include <stdexcept>
#include <string>

namespace walklen {

// Base for all input-domain violations. The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeWeightError : DomainError {
    using DomainError::DomainError;
};

struct NonzeroDiagonalError : DomainError {
    using DomainError::DomainError;
};

struct ZeroOffDiagonalError : DomainError {
    using DomainError::DomainError;
};

struct InvalidWalkError : DomainError {
    using DomainError::DomainError;
};

struct NotStronglyConnectedError : DomainError {
    using DomainError::DomainError;
};

struct NotSymmetricError : DomainError {
    using DomainError::DomainError;
};

struct NonMonotoneFiltrationError : DomainError {
    using DomainError::DomainError;
};

struct EmptyRelationError : DomainError {
    using DomainError::DomainError;
};

struct SizeMismatchError : DomainError {
    using DomainError::DomainError;
};

struct SearchSpaceTooLargeError : DomainError {
    using DomainError::DomainError;
};

struct InfeasibleArenaError : DomainError {
    using DomainError::DomainError;
};

struct IoError : DomainError {
    using DomainError::DomainError;
};

} // namespace walklen
