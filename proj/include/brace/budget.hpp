#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brace {

inline constexpr std::uint64_t kDefaultTermBudget = 1'000'000;

// Thrown when an expansion generates more terms than the caller allowed.
// Distinct from any mathematical verdict.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t used, std::uint64_t limit)
      : std::runtime_error("term budget exhausted: " + std::to_string(used) +
                           " terms generated, limit " + std::to_string(limit)),
        used_(used),
        limit_(limit) {}

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t used_;
  std::uint64_t limit_;
};

// Per-invocation counter of generated terms. Not shared between threads;
// each top-level call owns its own counter.
class TermBudget {
 public:
  TermBudget() = default;
  explicit TermBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetError(used_, limit_);
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_ = kDefaultTermBudget;
  std::uint64_t used_ = 0;
};

}  // namespace brace
