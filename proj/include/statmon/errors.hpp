#pragma once

#include <stdexcept>
#include <string>

namespace statmon {

// Malformed input: bad word, out-of-range value, unknown name.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Number of boxes beyond what a code path can handle.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Caller broke a precondition on an operator (asymmetric, non-Hermitian,
// dimension mismatch).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically valid request with an empty feasible set.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine failed a postcondition it should always meet.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace statmon
