#pragma once

#include <stdexcept>
#include <string>

namespace gsa {

enum class ErrorCode {
  ConductorMismatch,
  DivisionByZero,
  GroupTooLarge,
  IncompleteTable,
  WrongGroup,
  DimensionMismatch,
  InvalidSpec,
  InvalidCocycle,
  GroupMismatch,
  NoCentralUnit,
  AlphaNotSign,
  ResourceCap,
  UnsupportedOrder,
  NotNilpotent,
  DecompositionMismatch,
  NoSolution,
  NoReducedWitness,
  MixedDegrees,
  ParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Per-operation budget of scalar multiplications. A scope installs a cap for
// the current thread; nested scopes keep the outermost cap.
class BudgetScope {
 public:
  explicit BudgetScope(long long cap);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  bool owner_;
};

void charge(long long n);
long long budget_used();
long long& default_budget_cap();

}  // namespace gsa
