#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lf {

// Malformed serialized input. `offset` is the byte position when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset = 0)
      : std::runtime_error(msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Structurally valid input missing a required field.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& field, const std::string& msg)
      : std::runtime_error(msg), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Caller violated an operation's contract.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input data (unreadable image, degenerate box, ...).
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Endpoint call failed after exhausting retries.
class TransportError : public std::runtime_error {
 public:
  TransportError(const std::string& msg, int attempts)
      : std::runtime_error(msg), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// Endpoint replied but the reply violates the wire contract.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(const std::string& msg, std::string raw_body)
      : std::runtime_error(msg), raw_body_(std::move(raw_body)) {}
  const std::string& raw_body() const { return raw_body_; }

 private:
  std::string raw_body_;
};

// Configuration file/flag problem; maps to exit code 2.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lf
