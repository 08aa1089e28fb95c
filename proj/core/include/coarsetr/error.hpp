#pragma once

#include <stdexcept>
#include <string>

namespace coarsetr {

enum class ErrorKind {
  validation,    // malformed or inconsistent input
  out_of_scope,  // well-formed request the library does not compute
  internal       // an invariant the library itself should guarantee broke
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::string const& what)
      : Error(ErrorKind::validation, what) {}
};

class OutOfScopeError : public Error {
 public:
  explicit OutOfScopeError(std::string const& what)
      : Error(ErrorKind::out_of_scope, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(std::string const& what)
      : Error(ErrorKind::internal, what) {}
};

}  // namespace coarsetr
