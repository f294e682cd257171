#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eboca {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A term or record violated one of its construction invariants.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Syntax error in a line-oriented input (N-Triples, mapping documents,
// query text, JSON Lines batches).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string token, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what +
              (token.empty() ? std::string() : " near '" + token + "'")),
        line_(line),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

// A domain record is structurally fine but semantically inconsistent
// (e.g. an association whose endpoint kinds do not fit its kind).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Mapping documents: bad prefixes, unknown slots, join cycles, broken sources.
class MappingError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace eboca
