#ifndef HARVESTRL_ENV_HPP_
#define HARVESTRL_ENV_HPP_

#include <array>
#include <cstdint>

#include "harvestrl/node_config.hpp"
#include "harvestrl/rewards.hpp"
#include "harvestrl/trace.hpp"

namespace harvestrl {

enum class ObsVariant {
  kNeutrality,  // [B, |B - B0|, Eh, Wf_day]
  kAppGoal,     // [B, Eh, Wf_day, D_prev]
};

struct Observation {
  ObsVariant variant = ObsVariant::kNeutrality;
  std::array<double, 4> values{};
};

struct EnvState {
  double buffer_wh = 0.0;
  std::int64_t step_index = 0;  // hours since trace start
  double prev_duty = 0.0;
  bool failed_this_step = false;
};

struct StepResult {
  Observation next_observation;
  double reward = 0.0;
  double consumed_wh = 0.0;
  double harvested_wh = 0.0;
  bool failure = false;
  bool episode_done = false;
};

// Energy drawn in one hour at the given duty cycle. An attempted over-draw
// (buffer <= coeff * duty before harvest) consumes nothing.
double consumed_energy(double duty, double buffer_wh, const NodeConfig& cfg);

// Next buffer level: min(buffer + harvested - consumed, B_max), clamped at 0.
double buffer_update(double buffer_wh, double harvested_wh, double consumed_wh,
                     const NodeConfig& cfg);

struct EpisodeOptions {
  int episode_length = 24;  // steps per episode; 0 = run until the trace ends
};

/// Step-based simulator of one node against a fixed harvest trace. One step
/// is one hour. Deterministic: all randomness lives in the trace, the
/// forecast, and the agent. A depleted node keeps stepping; depletion only
/// raises the failure flag.
class SensorNodeEnv {
 public:
  SensorNodeEnv(NodeConfig cfg, ObsVariant variant, HarvestTrace trace,
                ForecastTrace forecast, RewardSpec reward,
                EpisodeOptions opts = {});

  // Starts an episode at start_hour with buffer = fraction * B_max.
  // Throws std::out_of_range when start_hour is not inside the trace.
  Observation reset(double initial_buffer_fraction, std::int64_t start_hour);

  // Advances one hour. The action is clipped to [duty_min, duty_max];
  // non-finite actions throw std::invalid_argument.
  StepResult step(double action_duty);

  const EnvState& state() const { return state_; }
  const NodeConfig& config() const { return cfg_; }
  const RewardSpec& reward_spec() const { return reward_; }
  ObsVariant variant() const { return variant_; }
  std::int64_t trace_size() const {
    return static_cast<std::int64_t>(trace_.size());
  }

  // Observation of the current state.
  Observation observe() const;

 private:
  double harvest_at(std::int64_t hour) const;
  double forecast_for(std::int64_t hour) const;

  NodeConfig cfg_;
  ObsVariant variant_;
  HarvestTrace trace_;
  ForecastTrace forecast_;
  RewardSpec reward_;
  EpisodeOptions opts_;

  EnvState state_;
  int steps_into_episode_ = 0;
  double episodic_accum_ = 0.0;
};

}  // namespace harvestrl

#endif  // HARVESTRL_ENV_HPP_
