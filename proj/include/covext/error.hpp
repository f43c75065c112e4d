#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace covext {

// Malformed or inconsistent input: bad syntax, degree mismatch, wrong arity.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Lazy evaluation or a bounded search ran out of elementary steps.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Counts elementary steps; throws once the limit is crossed.
class step_budget {
 public:
  static constexpr std::uint64_t kDefaultSteps = 1'000'000;

  explicit step_budget(std::uint64_t limit = kDefaultSteps) : limit_(limit) {}

  void spend(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) {
      throw budget_exceeded("evaluation budget of " + std::to_string(limit_) +
                            " steps exhausted");
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace covext
