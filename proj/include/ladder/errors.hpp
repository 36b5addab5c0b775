#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (bad JSON, bad half-integer literal, missing field).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical constraint.
class DomainError : public Error {
 public:
  DomainError(std::string clause, const std::string& message)
      : Error("[" + clause + "] " + message), clause_(std::move(clause)) {}

  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

/// A ladder datum that fails one clause of the ladder-datum definition.
class ValidationError : public DomainError {
 public:
  ValidationError(std::string clause, std::string block, const std::string& message)
      : DomainError(std::move(clause), block.empty() ? message : "block '" + block + "': " + message),
        block_(std::move(block)) {}

  const std::string& block() const { return block_; }

 private:
  std::string block_;
};

/// An invariant that valid inputs guarantee was broken; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ladder
