#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rauzy {

enum class ErrorKind {
  Parse,        // malformed permutation, move word, matrix or number literal
  InvalidMove,  // Rauzy move on a reducible permutation
  NotAllowed,   // path endpoints differ as unlabeled permutations
  CapExceeded,  // enumeration or size cap hit
  Domain,       // parameter out of range
  NotPrimitive, // spectral computation on a non-primitive matrix
  Internal      // a cross-check between two routes disagreed
};

// Message prefix used on stderr by the CLI; one per kind.
std::string_view error_prefix(ErrorKind kind) noexcept;

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

}  // namespace rauzy
