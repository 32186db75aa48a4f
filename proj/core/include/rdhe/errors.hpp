#pragma once

#include <stdexcept>
#include <string>

namespace rdhe {

/// Broad failure classes. The CLI maps each kind to a distinct exit status.
enum class ErrorKind {
  RejectedInput,  // caller passed an argument outside its documented domain
  MissingKey,     // an operation needed a key the caller does not hold
  Parse,          // bytes on disk are not a valid PGM or container
  Capacity,       // payload does not fit the container
  Corruption,     // container content violates a codec invariant
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class RejectedInputError : public Error {
 public:
  explicit RejectedInputError(const std::string& message)
      : Error(ErrorKind::RejectedInput, message) {}
};

class MissingKeyError : public Error {
 public:
  explicit MissingKeyError(const std::string& message)
      : Error(ErrorKind::MissingKey, message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorKind::Parse, message) {}
};

/// Structurally readable container whose payload framing is inconsistent.
class MalformedPayloadError : public ParseError {
 public:
  explicit MalformedPayloadError(const std::string& message)
      : ParseError("malformed payload: " + message) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& message)
      : Error(ErrorKind::Capacity, message) {}
};

class CorruptionError : public Error {
 public:
  explicit CorruptionError(const std::string& message)
      : Error(ErrorKind::Corruption, message) {}
};

}  // namespace rdhe
