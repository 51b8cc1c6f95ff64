#pragma once

#include <stdexcept>
#include <string>

namespace sparsecc {

// Bad input: out-of-domain arguments, unknown names, malformed expressions.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request that would exceed the configured work or size limits.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagreed. Always fatal.
class consistency_failure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sparsecc
