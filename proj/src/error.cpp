#include "rauzy/error.hpp"

namespace rauzy {

std::string_view error_prefix(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvalidMove: return "invalid move";
    case ErrorKind::NotAllowed: return "path not allowed";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::NotPrimitive: return "not primitive";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

}  // namespace rauzy
