#pragma once

#include <stdexcept>
#include <string>

namespace commgraph {

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OrderCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EnumerationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a table fails a group axiom; axiom() names the first violation.
class GroupAxiomError : public std::runtime_error {
 public:
  GroupAxiomError(std::string axiom, const std::string& detail)
      : std::runtime_error(axiom + ": " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

class AbelianGroupError : public std::invalid_argument {
 public:
  AbelianGroupError() : std::invalid_argument("Group must be non-abelian") {}
};

// Two computation routes that must agree did not. Always a bug.
class RouteMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace commgraph
