#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyrel {

enum class ErrorKind {
  StructureMismatch,   // operand outside the lattice carrier, or mixed lattices
  ShapeMismatch,       // matrix dimensions do not fit the operation
  NotAnEquivalence,
  NotAnLFunction,
  NotUniform,
  NotASolution,
  PreconditionViolation,
  SpaceTooLarge,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fuzzyrel
