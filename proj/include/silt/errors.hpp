#pragma once

#include <stdexcept>
#include <string>

namespace silt {

enum class ErrorKind {
  PossiblyInfinite,
  MalformedRelation,
  FieldTooSmall,
  CapExceeded,
  NotSilting,
  NotPresilting,
  SummandOutOfRange,
  OrderViolated,
  UInAddT,
  GenerationUndecided,
  NotCovariantlyFinite,
  NotSelfInjective,
  Parse,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure the library reports is an Error carrying a kind; the CLI
/// maps kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace silt
