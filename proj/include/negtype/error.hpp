#pragma once

#include <stdexcept>
#include <string>

namespace negtype {

/// Malformed or invalid user input (bad ids, lengths, file contents).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its documented domain, e.g. asking for
/// a minimal theta in a theta-free graph.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// A proven property failed to hold. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace negtype
