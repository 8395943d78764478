#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simdim {

enum class ErrorKind {
  InvalidInput,
  ParseError,
  DisconnectedGraph,
  EmptySubset,
  LabelCollision,
  ArityMismatch,
  UniverseTooSmall,
  UniverseTooLarge,
  NotInStabilizer,
  FreeEdgeOutsideComplement,
  NotAnAdjacencyBasis,
  EdgeOutsideEPrime,
  BadOrder,
  BudgetExceeded,
  OracleLimitExceeded,
  EmptyCatalog,
  UnknownTheorem,
  ValidationFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown by the solver when the node or time cap is hit. Carries the best
/// bounds known at that point so callers can still report something useful.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t lower, std::size_t upper, std::uint64_t nodes)
      : Error(ErrorKind::BudgetExceeded,
              "search budget exceeded after " + std::to_string(nodes) +
                  " nodes (bounds " + std::to_string(lower) + ".." +
                  std::to_string(upper) + ")"),
        lower_(lower),
        upper_(upper),
        nodes_(nodes) {}

  std::size_t lower() const noexcept { return lower_; }
  std::size_t upper() const noexcept { return upper_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
  std::uint64_t nodes_;
};

}  // namespace simdim
