#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition failures on graphs: unknown vertex, disconnected or empty input.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A modification whose references do not resolve, or whose new identifiers
/// collide with existing ones.
class ModificationError : public Error {
 public:
  using Error::Error;
};

/// A certificate that cannot even be replayed (as opposed to one that
/// replays but fails to witness an isomorphism).
class CertificateError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ValuationError : public Error {
 public:
  enum class Kind { kArityMismatch, kBadIndex, kNotInLink, kCenterNotMaximal, kEmptyIdeal, kOutOfRange, kPrecondition };

  ValuationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nlgraph
