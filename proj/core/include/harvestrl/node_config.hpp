#ifndef HARVESTRL_NODE_CONFIG_HPP_
#define HARVESTRL_NODE_CONFIG_HPP_

namespace harvestrl {

/// Physical constants of the simulated energy-harvesting node.
///
/// The buffer is an idealized store capped at buffer_capacity_wh. A duty
/// cycle D in [duty_min, duty_max] consumes consume_coeff_wh * D per hour,
/// provided the buffer holds more than that amount before harvest arrives.
struct NodeConfig {
  double buffer_capacity_wh = 40.0;  // B_max
  double consume_coeff_wh = 5.0;     // energy drawn per unit duty per hour
  double duty_min = 0.0;
  double duty_max = 1.0;
  double panel_rating_w = 6.0;

  // Throws std::invalid_argument if any invariant is violated.
  void validate() const;

  // Default node: 40 Wh buffer, 5 Wh full-duty draw, 6 W panel.
  static NodeConfig standard();

  // Alternative preset with a 0.5 Wh full-duty draw. Same buffer and panel;
  // useful when the load is an order of magnitude lighter.
  static NodeConfig low_power();
};

}  // namespace harvestrl

#endif  // HARVESTRL_NODE_CONFIG_HPP_
