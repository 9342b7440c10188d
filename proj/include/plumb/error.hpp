#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plumb {

enum class ErrorKind {
  usage,
  degenerate,
  not_reduced,
  not_blowdown_candidate,
  irreducible,
  unsupported,
  bound_exceeded,
  imbalanced_annulus,
  unreachable_framing,
  malformed_front,
  length_mismatch,
  singular,
  overflow,
};

std::string_view to_string(ErrorKind kind);

/// Every precondition or domain failure in the library surfaces as this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace plumb
