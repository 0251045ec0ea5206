#ifndef HARVESTRL_ROLLOUT_HPP_
#define HARVESTRL_ROLLOUT_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>

#include "harvestrl/env.hpp"

namespace harvestrl {

struct RolloutStep {
  std::array<double, 4> observation{};
  double reward = 0.0;
  bool done = false;
};

/// Minimal surface the trainers roll against: four raw observation values in,
/// one duty value out. Concrete envs decide what an episode is.
class RolloutEnv {
 public:
  virtual ~RolloutEnv() = default;
  // Begins a new episode; rng drives any episode-level sampling.
  virtual std::array<double, 4> reset(std::mt19937_64& rng) = 0;
  virtual RolloutStep step(double duty) = 0;
};

using EnvFactory = std::function<std::unique_ptr<RolloutEnv>()>;

/// Training adapter over SensorNodeEnv: every episode starts on a day drawn
/// uniformly from the trace's full days, with the configured initial buffer.
class NodeRolloutEnv final : public RolloutEnv {
 public:
  NodeRolloutEnv(SensorNodeEnv env, double initial_buffer_fraction)
      : env_(std::move(env)), initial_fraction_(initial_buffer_fraction) {}

  std::array<double, 4> reset(std::mt19937_64& rng) override {
    const auto days =
        static_cast<std::int64_t>(env_.trace_size() / 24);
    std::int64_t start = 0;
    if (days > 1) {
      std::uniform_int_distribution<std::int64_t> pick(0, days - 1);
      start = pick(rng) * 24;
    }
    return env_.reset(initial_fraction_, start).values;
  }

  RolloutStep step(double duty) override {
    const StepResult r = env_.step(duty);
    return {r.next_observation.values, r.reward, r.episode_done};
  }

  const SensorNodeEnv& env() const { return env_; }

 private:
  SensorNodeEnv env_;
  double initial_fraction_;
};

}  // namespace harvestrl

#endif  // HARVESTRL_ROLLOUT_HPP_
