#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

/// Input violates a documented precondition (bad parameters, vector outside
/// the Reeb cone, inhomogeneous polynomial support, ...). CLI exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Two independent computations of the same quantity disagreed. Always a
/// bug, never a property of the input. CLI exit code 3.
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace kstab
