#ifndef MINDIST_ERRORS_HPP
#define MINDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mindist {

/// Malformed textual input (polynomials, point files, spec files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would visit more candidates than the configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long needed, unsigned long long budget)
      : std::runtime_error(what + ": " + std::to_string(needed) + " candidates exceed budget " +
                           std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}

  unsigned long long needed() const noexcept { return needed_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long needed_;
  unsigned long long budget_;
};

}  // namespace mindist

#endif  // MINDIST_ERRORS_HPP
