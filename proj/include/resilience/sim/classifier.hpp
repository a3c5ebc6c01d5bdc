#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "resilience/sim/color.hpp"

namespace resilience::sim {

struct Prediction {
  BoxClass predicted_class = BoxClass::Box1;
  double epsilon = 0.0;
  std::array<double, kClassCount> probabilities{};
};

// Nearest-prototype classifier with a squared-distance softmax. Each class
// keeps an exponential moving average of the features it was taught with.
class IncrementalClassifier {
 public:
  // Score of class c is exp(-|f - p_c|^2 / temperature); a class without a
  // prototype scores 1, the zero-distance ceiling. Ties go to the lowest
  // class index.
  Prediction predict(const Color& features, double temperature) const {
    if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");
    std::array<double, kClassCount> logits{};
    for (std::size_t c = 0; c < kClassCount; ++c) {
      logits[c] = prototypes_[c] ? -squared_distance(features, *prototypes_[c]) / temperature
                                 : 0.0;
    }
    // Shifting by the max logit keeps far-away queries from underflowing to 0/0.
    const double top = *std::max_element(logits.begin(), logits.end());
    double total = 0.0;
    Prediction out;
    for (std::size_t c = 0; c < kClassCount; ++c) {
      out.probabilities[c] = std::exp(logits[c] - top);
      total += out.probabilities[c];
    }
    std::size_t best = 0;
    for (std::size_t c = 0; c < kClassCount; ++c) {
      out.probabilities[c] /= total;
      if (out.probabilities[c] > out.probabilities[best]) best = c;
    }
    out.predicted_class = static_cast<BoxClass>(best);
    out.epsilon = out.probabilities[best];
    return out;
  }

  void learn(const Color& features, BoxClass label, double ema_rate) {
    if (!(ema_rate > 0.0 && ema_rate <= 1.0)) {
      throw std::invalid_argument("ema_rate must lie in (0,1]");
    }
    const std::size_t c = to_index(label);
    if (!prototypes_[c]) {
      prototypes_[c] = features;
    } else {
      Color& p = *prototypes_[c];
      for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = (1.0 - ema_rate) * p[i] + ema_rate * features[i];
      }
    }
    ++counts_[c];
  }

  bool knows(BoxClass c) const { return prototypes_[to_index(c)].has_value(); }
  const std::optional<Color>& prototype(BoxClass c) const { return prototypes_[to_index(c)]; }
  std::size_t count(BoxClass c) const { return counts_[to_index(c)]; }

 private:
  std::array<std::optional<Color>, kClassCount> prototypes_{};
  std::array<std::size_t, kClassCount> counts_{};
};

}  // namespace resilience::sim
