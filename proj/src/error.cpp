#include "catk/error.hpp"

namespace catk {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Data: return "data";
    case ErrorKind::InconsistentSides: return "inconsistent-sides";
    case ErrorKind::UndefinedCosq: return "undefined-cosq";
    case ErrorKind::NoUniqueGeodesic: return "no-unique-geodesic";
    case ErrorKind::ReflectionUndefined: return "reflection-undefined";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace catk
