#include "harvestrl/env.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace harvestrl {

double consumed_energy(double duty, double buffer_wh, const NodeConfig& cfg) {
  const double demand = cfg.consume_coeff_wh * duty;
  return buffer_wh > demand ? demand : 0.0;
}

double buffer_update(double buffer_wh, double harvested_wh, double consumed_wh,
                     const NodeConfig& cfg) {
  const double next = buffer_wh + harvested_wh - consumed_wh;
  return std::max(0.0, std::min(next, cfg.buffer_capacity_wh));
}

SensorNodeEnv::SensorNodeEnv(NodeConfig cfg, ObsVariant variant,
                             HarvestTrace trace, ForecastTrace forecast,
                             RewardSpec reward, EpisodeOptions opts)
    : cfg_(cfg),
      variant_(variant),
      trace_(std::move(trace)),
      forecast_(std::move(forecast)),
      reward_(reward),
      opts_(opts) {
  cfg_.validate();
  reward_.validate(cfg_.buffer_capacity_wh);
  if (trace_.hourly_wh.empty()) {
    throw std::invalid_argument("SensorNodeEnv: empty harvest trace");
  }
}

double SensorNodeEnv::harvest_at(std::int64_t hour) const {
  if (hour < 0 || hour >= trace_size()) return 0.0;
  return trace_.hourly_wh[static_cast<std::size_t>(hour)];
}

double SensorNodeEnv::forecast_for(std::int64_t hour) const {
  if (forecast_.daily_wh.empty()) return 0.0;
  const auto day = static_cast<std::size_t>(std::max<std::int64_t>(hour, 0) / 24);
  return forecast_.daily_wh[std::min(day, forecast_.daily_wh.size() - 1)];
}

Observation SensorNodeEnv::observe() const {
  Observation obs;
  obs.variant = variant_;
  const double b = state_.buffer_wh;
  const double eh = harvest_at(state_.step_index);
  const double wf = forecast_for(state_.step_index);
  if (variant_ == ObsVariant::kNeutrality) {
    obs.values = {b, edist(b, reward_.b0_wh), eh, wf};
  } else {
    obs.values = {b, eh, wf, state_.prev_duty};
  }
  return obs;
}

Observation SensorNodeEnv::reset(double initial_buffer_fraction,
                                 std::int64_t start_hour) {
  if (!(initial_buffer_fraction >= 0.0 && initial_buffer_fraction <= 1.0)) {
    throw std::invalid_argument(
        "reset: initial_buffer_fraction must be in [0, 1]");
  }
  if (start_hour < 0 || start_hour >= trace_size()) {
    throw std::out_of_range("reset: start_hour outside the harvest trace");
  }
  state_.buffer_wh = initial_buffer_fraction * cfg_.buffer_capacity_wh;
  state_.step_index = start_hour;
  state_.prev_duty = 0.0;
  state_.failed_this_step = false;
  steps_into_episode_ = 0;
  episodic_accum_ = 0.0;
  return observe();
}

StepResult SensorNodeEnv::step(double action_duty) {
  if (!std::isfinite(action_duty)) {
    throw std::invalid_argument("step: non-finite action");
  }
  if (state_.step_index >= trace_size()) {
    throw std::out_of_range("step: harvest trace exhausted");
  }
  const double duty =
      std::clamp(action_duty, cfg_.duty_min, cfg_.duty_max);

  const double harvested = harvest_at(state_.step_index);
  const double consumed = consumed_energy(duty, state_.buffer_wh, cfg_);
  const double next_buffer =
      buffer_update(state_.buffer_wh, harvested, consumed, cfg_);
  const bool failure = next_buffer == 0.0;

  double step_reward = 0.0;
  if (reward_.kind == RewardKind::kNeutrality) {
    step_reward = reward_e(edist(next_buffer, reward_.b0_wh));
  } else {
    step_reward =
        reward_a(duty, duty_variance(duty, state_.prev_duty), next_buffer,
                 reward_);
  }

  state_.buffer_wh = next_buffer;
  state_.step_index += 1;
  state_.prev_duty = duty;
  state_.failed_this_step = failure;
  steps_into_episode_ += 1;

  StepResult result;
  result.consumed_wh = consumed;
  result.harvested_wh = harvested;
  result.failure = failure;
  result.episode_done =
      (opts_.episode_length > 0 && steps_into_episode_ >= opts_.episode_length) ||
      state_.step_index >= trace_size();

  // Sparse assignment: emit the accumulated sum every episodic_T steps (and
  // the remainder when the episode ends early), zero in between.
  if (reward_.episodic_T <= 1) {
    result.reward = step_reward;
  } else {
    episodic_accum_ += step_reward;
    if (steps_into_episode_ % reward_.episodic_T == 0 || result.episode_done) {
      result.reward = episodic_accum_;
      episodic_accum_ = 0.0;
    }
  }

  result.next_observation = observe();
  return result;
}

}  // namespace harvestrl
