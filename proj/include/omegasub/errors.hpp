#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegasub {

// Malformed or mismatched input (unknown letter, alphabet mismatch, bad file).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A syntactically valid input rejected by an operation's precondition,
// e.g. an erasing homomorphism handed to a procedure that needs a substitution.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured budget (vertex count, orbit length) was exhausted.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::string file, std::size_t line, std::string token, const std::string& message)
      : InputError(file + ":" + std::to_string(line) + ": " + message +
                   (token.empty() ? std::string() : " (at '" + token + "')")),
        file_(std::move(file)),
        line_(line),
        token_(std::move(token)) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string token_;
};

}  // namespace omegasub
