#ifndef HARVESTRL_REWARDS_HPP_
#define HARVESTRL_REWARDS_HPP_

#include <span>

namespace harvestrl {

enum class RewardKind {
  kNeutrality,  // piecewise reward on the distance |B - B0|
  kAppGoal,     // duty minus damped squared duty variance, penalty on failure
};

/// Which reward to compute and its parameters. episodic_T = 1 means the
/// reward is emitted every step; T > 1 accumulates T per-step terms and
/// emits their sum on the T-th step.
struct RewardSpec {
  RewardKind kind = RewardKind::kNeutrality;
  double b0_wh = 24.0;           // target buffer level (neutrality only)
  double zeta = 0.05;            // damping factor on squared variance (app-goal)
  double failure_penalty = 5.0;  // subtracted when the buffer is empty (app-goal)
  int episodic_T = 1;

  void validate(double buffer_capacity_wh) const;
};

// Distance from the target buffer level: |buffer - b0|.
double edist(double buffer_wh, double b0_wh);

// Piecewise neutrality reward. Exactly-zero distance (within 1e-9 Wh) pays
// 500; the pieces below are literal, including the discontinuity at 1 Wh:
//   500 - d/10  on (0, 1],   10 - d/100  on (1, 5],   -500  above 5.
double reward_e(double edist_wh);

// Per-step duty variance: |duty - prev_duty|.
double duty_variance(double duty, double prev_duty);

// App-goal reward: duty - zeta * var^2 while the buffer holds charge,
// -failure_penalty when it is empty.
double reward_a(double duty, double var, double buffer_after_wh,
                const RewardSpec& spec);

// Episode-level form: the sum of the per-step terms. With one term this is
// identical to reward_a. Throws std::invalid_argument on an empty sequence.
double reward_a_episodic(std::span<const double> step_rewards);

}  // namespace harvestrl

#endif  // HARVESTRL_REWARDS_HPP_
