#ifndef GK_ERRORS_HPP
#define GK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

// Evaluation requested outside a chart's box.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A bundle model violates one of its structural invariants (cocycle,
// connection gluing, section gluing).
struct ModelInvalidError : std::runtime_error {
  explicit ModelInvalidError(const std::string& what) : std::runtime_error(what) {}
};

// An operation's stated precondition does not hold for the given input.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solve did not converge within its iteration budget.
struct SolverFailure : std::runtime_error {
  SolverFailure(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

// The moment map equation admits no solution for the requested field, so a
// requested decomposition cannot be produced.
struct ObstructedError : std::runtime_error {
  explicit ObstructedError(const std::string& what) : std::runtime_error(what) {}
};

// A computed quantity failed an internal consistency bound (e.g. a value that
// must lie in the span of an algebra basis does not).
struct InternalConsistencyError : std::runtime_error {
  explicit InternalConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gk

#endif  // GK_ERRORS_HPP
