#include "rdhe/errors.hpp"

namespace rdhe {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::RejectedInput: return "rejected input";
    case ErrorKind::MissingKey: return "missing key";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Capacity: return "capacity exceeded";
    case ErrorKind::Corruption: return "corruption";
  }
  return "unknown";
}

}  // namespace rdhe
