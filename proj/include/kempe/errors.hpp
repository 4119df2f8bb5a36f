#pragma once

#include <stdexcept>
#include <string>

namespace kempe {

// Invalid input: bad vertex ids, non-stable classes, mismatched colorings,
// malformed files. CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded (oracle scale limits, fiber node
// cap). CLI exit code 2.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Indicates a bug, never bad input.
// CLI exit code 3.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kempe
