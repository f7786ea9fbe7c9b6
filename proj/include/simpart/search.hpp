#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace simpart {

enum class SearchStatus { sat, unsat, budget_exceeded };

/// Outcome of an exhaustive search.  UNSAT is only ever reported after the
/// tree has been exhausted; running out of budget is a distinct status, never
/// folded into UNSAT.
struct SearchReport {
  SearchStatus status = SearchStatus::unsat;
  std::uint64_t nodes_explored = 0;
  std::uint64_t options_generated = 0;
  double wall_seconds = 0.0;
};

struct SearchLimits {
  std::optional<double> budget_seconds;
  int threads = 1;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Cooperative cutoff shared between worker branches: a wall-clock deadline
/// plus a "no branch after this index can matter" bound for early-solution
/// cancellation.
struct SearchControl {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::atomic<std::uint64_t> cancel_after{~std::uint64_t{0}};
  std::atomic<bool> budget_hit{false};

  bool out_of_budget() {
    if (!deadline) return false;
    if (std::chrono::steady_clock::now() > *deadline) {
      budget_hit.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

struct SearchAbort {};  // unwinds a worker; state is discarded afterwards

}  // namespace detail

}  // namespace simpart
