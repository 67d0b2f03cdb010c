#pragma once

#include <stdexcept>
#include <string>

namespace glstar {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or ill-typed input: unknown letters, sort mismatches,
/// alphabet mismatches, unparsable files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation or an internal invariant of the learner
/// failed. Seeing one of these means a domain or learner bug, not bad input.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Round, query or join-closure limits were exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A syntactic algebra could not be extracted from a learned automaton.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// The teacher answered inconsistently (e.g. a counterexample that does not
/// actually separate hypothesis and target).
class TeacherError : public Error {
 public:
  using Error::Error;
};

}  // namespace glstar
