#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trinity {

enum class ErrorKind {
  InvalidArgument,
  UnknownLabel,
  NotEulerian,
  NotConnected,
  MalformedRotation,
  BoundExceeded,
  NotABitrade,
  NotSeparated,
  NonSpherical,
  NotDirectedEulerian,
  InfiniteGroup,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` discriminates the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trinity
