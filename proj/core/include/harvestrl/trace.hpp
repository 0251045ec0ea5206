#ifndef HARVESTRL_TRACE_HPP_
#define HARVESTRL_TRACE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace harvestrl {

/// One row of a radiation CSV: an hourly timestamp plus the panel output as
/// a fraction of its rating (values above 1 are allowed for scaled datasets,
/// up to 10).
struct RadiationRecord {
  std::int64_t epoch_hours = 0;  // hours since 1970-01-01T00:00
  double irradiance = 0.0;
};

enum class TraceOrigin { kCsv, kSynthetic };

/// Hourly harvested-energy series in Wh.
struct HarvestTrace {
  std::vector<double> hourly_wh;
  TraceOrigin origin = TraceOrigin::kSynthetic;

  std::size_t size() const { return hourly_wh.size(); }
  std::size_t full_days() const { return hourly_wh.size() / 24; }
  // Sum of hours [24*day, 24*day+24).
  double day_total_wh(std::size_t day) const;
};

/// Per-day harvest totals as seen by the agents, optionally perturbed by
/// bounded multiplicative noise.
struct ForecastTrace {
  std::vector<double> daily_wh;
  double noise_fraction = 0.0;
  std::uint64_t seed = 0;
};

struct SynthProfile {
  double amplitude_wh = 6.0;        // clear-sky peak of the diurnal half-sine
  double seasonal_modulation = 0.0; // in [0, 1): +/- swing of the daily peak
  double cloud_noise = 0.0;         // sigma of the per-day lognormal factor
};

// Parses the documented CSV schema (header "timestamp,irradiance", hourly
// ISO-8601 timestamps) and converts fractions to Wh via the panel rating.
// Throws std::runtime_error naming the offending line on malformed rows,
// non-monotone or non-hourly timestamps, or out-of-range irradiance.
HarvestTrace load_csv(const std::filesystem::path& path, double panel_rating_w);

// Inverse of load_csv: writes hourly values as fractions of the panel rating
// with synthetic hourly timestamps starting at start_epoch_hours.
void save_csv(const std::filesystem::path& path, const HarvestTrace& trace,
              double panel_rating_w, std::int64_t start_epoch_hours = 350640);

// Deterministic synthetic trace: half-sine diurnal shape (hours [6, 18) of
// each day, zero at night), seasonal modulation of the daily peak
//   peak_d = amplitude * (1 - seasonal_modulation * cos(2*pi*d/365)),
// and a mean-one per-day lognormal cloud factor exp(sigma*z_d - sigma^2/2).
HarvestTrace synth_generate(int days, std::uint64_t seed,
                            const SynthProfile& profile);

// Per-day totals of the trace scaled by (1 + u_d), u_d uniform in
// [-noise_fraction, +noise_fraction] and deterministic in seed; results are
// clamped at zero. A trailing partial day is ignored. noise_fraction = 0
// returns the exact totals.
ForecastTrace make_forecast(const HarvestTrace& trace, double noise_fraction,
                            std::uint64_t seed);

// ISO-8601 helpers used by the CSV layer ("YYYY-MM-DDTHH:MM:SS"; minutes and
// seconds optional on input, always written on output).
std::int64_t parse_iso_hour(const std::string& text);
std::string format_iso_hour(std::int64_t epoch_hours);

}  // namespace harvestrl

#endif  // HARVESTRL_TRACE_HPP_
