#pragma once

#include <stdexcept>
#include <string>

namespace qgz {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// graph construction / validation
struct GraphError : Error { using Error::Error; };
struct EmptyGraphError : GraphError { using GraphError::GraphError; };
struct SelfLoopError : GraphError { using GraphError::GraphError; };
struct DuplicateEdgeError : GraphError { using GraphError::GraphError; };
struct DisconnectedError : GraphError { using GraphError::GraphError; };

// numerics
struct EigensolverFailure : Error { using Error::Error; };
struct PoleAtOne : Error { using Error::Error; };
struct PoleAtHalf : Error { using Error::Error; };
struct PoleAtNonpositiveInteger : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct OrderTooLarge : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DegenerateDeterminant : Error { using Error::Error; };
struct InternalCheckFailure : Error { using Error::Error; };

}  // namespace qgz
