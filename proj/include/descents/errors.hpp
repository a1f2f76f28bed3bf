#pragma once

#include <stdexcept>
#include <string>

namespace descents {

// Enumeration or oracle would exceed its configured work budget.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Mismatched operands (size, kind, coefficient ring) or an index outside
// the valid range of an operation.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Poset construction ran into a cycle / antisymmetry violation.
class PosetInconsistency : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed text input: permutation windows, poset files, rational literals.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace descents
