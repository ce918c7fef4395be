#pragma once

#include <stdexcept>
#include <string>

namespace qtqft {

// Bad user input: malformed partitions, out-of-range indices, context mismatch.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A cross-check between two computation routes failed, or an extraction that
// must be a q-monomial is not one.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested object would exceed the configured entry cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cache or output files could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qtqft
