#ifndef CONVALG_ERRORS_HPP
#define CONVALG_ERRORS_HPP

#include <stdexcept>

namespace convalg {

/// Malformed textual input (JSON documents, CLI literals). CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated operation precondition or type invariant. CLI exit code 3.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Overflow in exact integer arithmetic. CLI exit code 4.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace convalg

#endif  // CONVALG_ERRORS_HPP
