#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nrack {

/// Malformed input or constructor parameters outside their domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structure lacks an axiom that an operation requires of it
/// (e.g. degenerate homology requested for something that is not an n-quandle).
class AxiomViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed its configured size or search budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : std::runtime_error(what), requested_(requested), cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

}  // namespace nrack
