#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rinf {

/// Malformed input: bad shapes, non-unimodular matrices, unparsable words.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size budget would be exceeded. Carries the required size so
/// callers can report it or raise the limit.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string budget, std::uint64_t required, std::uint64_t limit)
      : std::runtime_error(budget + " budget exceeded: required " + std::to_string(required) +
                           ", limit " + std::to_string(limit)),
        budget_(std::move(budget)),
        required_(required),
        limit_(limit) {}

  const std::string& budget() const noexcept { return budget_; }
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string budget_;
  std::uint64_t required_;
  std::uint64_t limit_;
};

class UndefinedGenerator : public std::out_of_range {
 public:
  explicit UndefinedGenerator(std::uint64_t index)
      : std::out_of_range("generator map has no image for x" + std::to_string(index)), index_(index) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

/// A computed certificate failed its own re-check. Always a bug, never bad input.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rinf
