#pragma once

#include <stdexcept>
#include <string>

namespace mp {

// Error identities used across the library. Tests match on the code, not
// on message text.
enum class Err {
  NonPrime,
  ReducibleModulus,
  SizeLimitExceeded,
  NotReduced,
  Trivial,
  DependentBasis,
  NonIntegralResult,
  ArityMismatch,
  RankOutOfRange,
  NoSolution,
  SearchExhausted,
  BudgetExceeded,
  DefinitionMismatch,
  RelationViolated,
  NotPrimePower,
  NotSquare,
  InvalidTestFunction,
  UnknownFormat,
  ParseError,
  DivideByZero,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace mp
