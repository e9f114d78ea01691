#pragma once

#include <stdexcept>
#include <string>

namespace specfun {

enum class ErrorKind {
  domain,
  pole,
  overflow,
  range,
  bracket,
  iteration_cap,
  constraint,
  parameter,
  unknown_id,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace specfun
