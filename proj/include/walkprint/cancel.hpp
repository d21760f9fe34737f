#pragma once

#include <atomic>

namespace walkprint {

// Cooperative cancellation flag for long-running exact computations.
class CancelToken {
 public:
  void request_stop() noexcept { stop_.store(true, std::memory_order_relaxed); }
  bool stop_requested() const noexcept { return stop_.load(std::memory_order_relaxed); }

 private:
  std::atomic<bool> stop_{false};
};

}  // namespace walkprint
