#pragma once

#include <stdexcept>
#include <string>

namespace ghsimplex {

/// Which metric axiom a candidate distance matrix violates.
enum class MetricFault {
  AsymmetricMatrix,
  NegativeDistance,
  NonzeroDiagonal,
  TriangleViolation,
};

/// Thrown by space validation; carries the first offending indices.
/// `k` is meaningful only for TriangleViolation (the middle point).
class MetricError : public std::runtime_error {
 public:
  MetricError(MetricFault fault, int i, int j, int k, std::string what)
      : std::runtime_error(std::move(what)), fault(fault), i(i), j(j), k(k) {}

  MetricFault fault;
  int i;
  int j;
  int k;
};

/// Precondition failures of individual operations.
enum class Fail {
  SinglePointSpace,
  EmptySet,
  NonpositiveScale,
  DTooSmall,
  KOutOfRange,
  MOutOfRange,
  PartitionMismatch,
  NotSurjective,
  TooLarge,
  BlockCountMismatch,
  DimensionMismatch,
  LambdaTooSmall,
  LambdaTooLarge,
  PreconditionFailed,
  OrderingViolated,
};

class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(Fail kind, std::string what)
      : std::invalid_argument(std::move(what)), kind(kind) {}

  Fail kind;
};

}  // namespace ghsimplex
