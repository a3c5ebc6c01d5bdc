#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "resilience/core/iteration.hpp"

namespace resilience {

// Autonomous Classification Ratio at one iteration.
struct AcrPoint {
  std::size_t index = 0;
  double acr = 0.0;

  friend bool operator==(const AcrPoint&, const AcrPoint&) = default;
};

// Fixed-capacity FIFO of contributions, pre-filled with zeros. Every push
// evicts the oldest slot, so the window always holds exactly `size()` slots.
class AcrWindow {
 public:
  explicit AcrWindow(std::size_t window_size) : slots_(window_size, 0) {
    if (window_size == 0) {
      throw std::invalid_argument("AcrWindow: window_size must be >= 1");
    }
  }

  AcrPoint push(Contribution bit) {
    const auto value = static_cast<unsigned char>(bit);
    running_sum_ -= slots_[head_];
    slots_[head_] = value;
    running_sum_ += value;
    head_ = (head_ + 1) % slots_.size();
    return {pushed_++, acr()};
  }

  double acr() const {
    return static_cast<double>(running_sum_) / static_cast<double>(slots_.size());
  }

  std::size_t size() const { return slots_.size(); }
  std::size_t running_sum() const { return running_sum_; }
  std::size_t pushed() const { return pushed_; }

  // Oldest first.
  std::vector<int> slots() const {
    std::vector<int> ordered;
    ordered.reserve(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      ordered.push_back(slots_[(head_ + i) % slots_.size()]);
    }
    return ordered;
  }

 private:
  std::vector<unsigned char> slots_;
  std::size_t head_ = 0;
  std::size_t running_sum_ = 0;
  std::size_t pushed_ = 0;
};

}  // namespace resilience
