#pragma once

#include <stdexcept>
#include <string>

namespace systolic {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Value would overflow double precision (sinh of huge arguments).
class RangeError : public std::range_error {
public:
  using std::range_error::range_error;
};

/// Malformed rotation system, cycle, or input file.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Randomized embedding search exhausted its iteration budget.
class SearchError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of a multi-step procedure does not hold.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operation not defined for the given input class.
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace systolic
