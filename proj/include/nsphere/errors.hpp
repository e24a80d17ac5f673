#pragma once

#include <stdexcept>
#include <string>

namespace nsphere {

// Malformed or out-of-range input (bad token, unknown id, n outside the
// supported range). The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition of an operation does not hold for otherwise
// well-formed input. The CLI maps this to exit code 2.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exhaustive search hit its state cap before finishing.
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nsphere
