#pragma once

#include <atomic>
#include <chrono>
#include <optional>

#include "lplab/errors.hpp"

namespace lplab {

// Cooperative cancellation: search loops poll it and throw TimeoutError.
class Deadline {
 public:
  using clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::duration<double> budget)
      : until_(clock::now() + std::chrono::duration_cast<clock::duration>(budget)) {}

  static Deadline never() { return Deadline{}; }

  void cancel() { cancelled_.store(true, std::memory_order_relaxed); }

  bool expired() const {
    if (cancelled_.load(std::memory_order_relaxed)) return true;
    return until_ && clock::now() >= *until_;
  }

  void check(const char* where) const {
    if (expired()) throw TimeoutError(std::string("time budget exhausted in ") + where);
  }

  Deadline(const Deadline& other) : until_(other.until_), cancelled_(other.cancelled_.load()) {}
  Deadline& operator=(const Deadline& other) {
    until_ = other.until_;
    cancelled_.store(other.cancelled_.load());
    return *this;
  }

 private:
  std::optional<clock::time_point> until_;
  std::atomic<bool> cancelled_{false};
};

}  // namespace lplab
