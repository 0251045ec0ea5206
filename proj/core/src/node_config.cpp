#include "harvestrl/node_config.hpp"

#include <stdexcept>

namespace harvestrl {

void NodeConfig::validate() const {
  if (!(buffer_capacity_wh > 0.0)) {
    throw std::invalid_argument("NodeConfig: buffer_capacity_wh must be > 0");
  }
  if (!(consume_coeff_wh > 0.0)) {
    throw std::invalid_argument("NodeConfig: consume_coeff_wh must be > 0");
  }
  if (!(duty_min >= 0.0 && duty_min < duty_max && duty_max <= 1.0)) {
    throw std::invalid_argument(
        "NodeConfig: require 0 <= duty_min < duty_max <= 1");
  }
  if (!(panel_rating_w >= 0.0)) {
    throw std::invalid_argument("NodeConfig: panel_rating_w must be >= 0");
  }
}

NodeConfig NodeConfig::standard() { return NodeConfig{}; }

NodeConfig NodeConfig::low_power() {
  NodeConfig cfg;
  cfg.consume_coeff_wh = 0.5;
  return cfg;
}

}  // namespace harvestrl
