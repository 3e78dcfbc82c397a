#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rainbow {

/// Malformed input or a violated precondition. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside what an operation supports (e.g. a
/// pattern that is too large for the brute-force automorphism scan).
class Unsupported : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A search hit its node or time cap before finishing. Maps to exit code 3.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Something that a proven invariant rules out has happened. Maps to exit
/// code 4.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rainbow
