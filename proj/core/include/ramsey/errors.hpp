#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal step that is guaranteed to succeed by a proven statement
/// failed; this always indicates a bug and is a test-failure condition.
class LemmaContradictionError : public std::logic_error {
 public:
  explicit LemmaContradictionError(const std::string& what) : std::logic_error(what) {}
};

/// A node or work budget ran out where the API has no third-outcome channel.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ramsey
