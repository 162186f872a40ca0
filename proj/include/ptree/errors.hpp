#pragma once

#include <stdexcept>
#include <string>

namespace ptree {

// Violated precondition or misuse of an API (wrong sizes, wrong call order).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Position outside the valid range of a series or pattern.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request would exceed a hard computational budget.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Non-finite or divergent numerical result.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; line() is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ptree
