#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpspec {

// Bad shapes, invalid enum combinations, violated preconditions.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters that are well-formed but cannot be satisfied, e.g. an ER model
// too sparse to be connected.
class InfeasibleConfiguration : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, long iterations)
      : std::runtime_error(what), iterations_(iterations) {}
  long iterations() const noexcept { return iterations_; }

 private:
  long iterations_;
};

// Pearson correlation of a constant vector.
class UndefinedCorrelation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A random graph model that cannot produce a connected sample.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gpspec
