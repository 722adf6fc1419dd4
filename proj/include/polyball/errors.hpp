#pragma once

#include <stdexcept>
#include <string>

namespace polyball {

/// Malformed or invalid input. The message names the violated invariant.
/// Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent computation routes disagreed, or an internal precondition
/// failed. Always a bug (or a falsified claim). Maps to CLI exit code 2.
class InternalInconsistencyError : public std::logic_error {
  public:
    explicit InternalInconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polyball
