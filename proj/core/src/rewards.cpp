#include "harvestrl/rewards.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace harvestrl {

namespace {
// Exact float equality on the 500-branch is measure-zero, so "zero distance"
// means within this many Wh.
constexpr double kZeroDistTolWh = 1e-9;
}  // namespace

void RewardSpec::validate(double buffer_capacity_wh) const {
  if (!(zeta >= 0.0)) {
    throw std::invalid_argument("RewardSpec: zeta must be >= 0");
  }
  if (!(failure_penalty >= 0.0)) {
    throw std::invalid_argument("RewardSpec: failure_penalty must be >= 0");
  }
  if (episodic_T < 1) {
    throw std::invalid_argument("RewardSpec: episodic_T must be >= 1");
  }
  if (!(b0_wh >= 0.0 && b0_wh <= buffer_capacity_wh)) {
    throw std::invalid_argument("RewardSpec: b0_wh must be in [0, B_max]");
  }
}

double edist(double buffer_wh, double b0_wh) {
  return std::abs(buffer_wh - b0_wh);
}

double reward_e(double edist_wh) {
  if (edist_wh <= kZeroDistTolWh) return 500.0;
  if (edist_wh <= 1.0) return 500.0 - edist_wh / 10.0;
  if (edist_wh <= 5.0) return 10.0 - edist_wh / 100.0;
  return -500.0;
}

double duty_variance(double duty, double prev_duty) {
  return std::abs(duty - prev_duty);
}

double reward_a(double duty, double var, double buffer_after_wh,
                const RewardSpec& spec) {
  if (buffer_after_wh <= 0.0) return -spec.failure_penalty;
  return duty - spec.zeta * var * var;
}

double reward_a_episodic(std::span<const double> step_rewards) {
  if (step_rewards.empty()) {
    throw std::invalid_argument("reward_a_episodic: empty step sequence");
  }
  return std::accumulate(step_rewards.begin(), step_rewards.end(), 0.0);
}

}  // namespace harvestrl
