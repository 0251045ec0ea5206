#include "harvestrl/trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace harvestrl {

namespace {

constexpr double kMaxIrradianceFraction = 10.0;

[[noreturn]] void parse_fail(const std::filesystem::path& path, int line,
                             const std::string& what) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                           what);
}

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yr + (m <= 2));
}

}  // namespace

std::int64_t parse_iso_hour(const std::string& text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  int n = std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%d", &y, &mo, &d, &h, &mi,
                      &s);
  if (n < 4) {
    throw std::runtime_error("bad ISO-8601 hour: '" + text + "'");
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi != 0 ||
      s != 0) {
    throw std::runtime_error("timestamp not on an hour boundary: '" + text +
                             "'");
  }
  return days_from_civil(y, mo, d) * 24 + h;
}

std::string format_iso_hour(std::int64_t epoch_hours) {
  std::int64_t days = epoch_hours / 24;
  int hour = static_cast<int>(epoch_hours % 24);
  if (hour < 0) {
    hour += 24;
    days -= 1;
  }
  int y, m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:00:00", y, m, d, hour);
  return buf;
}

double HarvestTrace::day_total_wh(std::size_t day) const {
  double sum = 0.0;
  for (std::size_t h = 24 * day; h < 24 * day + 24 && h < hourly_wh.size();
       ++h) {
    sum += hourly_wh[h];
  }
  return sum;
}

HarvestTrace load_csv(const std::filesystem::path& path,
                      double panel_rating_w) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open trace file: " + path.string());
  }
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line) || line != "timestamp,irradiance") {
    parse_fail(path, 1, "expected header 'timestamp,irradiance'");
  }
  HarvestTrace trace;
  trace.origin = TraceOrigin::kCsv;
  std::int64_t prev_hours = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      parse_fail(path, lineno, "expected 'timestamp,irradiance'");
    }
    std::int64_t hours;
    try {
      hours = parse_iso_hour(line.substr(0, comma));
    } catch (const std::exception& e) {
      parse_fail(path, lineno, e.what());
    }
    const std::string field = line.substr(comma + 1);
    double irradiance = 0.0;
    std::size_t used = 0;
    try {
      irradiance = std::stod(field, &used);
    } catch (const std::exception&) {
      parse_fail(path, lineno, "irradiance is not a number");
    }
    if (used != field.size()) {
      parse_fail(path, lineno, "trailing characters after irradiance");
    }
    if (!std::isfinite(irradiance) || irradiance < 0.0) {
      parse_fail(path, lineno, "irradiance must be finite and >= 0");
    }
    if (irradiance > kMaxIrradianceFraction) {
      parse_fail(path, lineno, "irradiance above the schema bound of 10");
    }
    if (!first && hours != prev_hours + 1) {
      parse_fail(path, lineno, "timestamps must increase in 1 h steps");
    }
    prev_hours = hours;
    first = false;
    trace.hourly_wh.push_back(irradiance * panel_rating_w);
  }
  if (trace.hourly_wh.empty()) {
    parse_fail(path, lineno, "no data rows");
  }
  return trace;
}

void save_csv(const std::filesystem::path& path, const HarvestTrace& trace,
              double panel_rating_w, std::int64_t start_epoch_hours) {
  if (!(panel_rating_w > 0.0)) {
    throw std::runtime_error("save_csv: panel rating must be > 0");
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write trace file: " + path.string());
  }
  out << "timestamp,irradiance\n";
  char buf[40];
  for (std::size_t i = 0; i < trace.hourly_wh.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g",
                  trace.hourly_wh[i] / panel_rating_w);
    out << format_iso_hour(start_epoch_hours + static_cast<std::int64_t>(i))
        << ',' << buf << '\n';
  }
}

HarvestTrace synth_generate(int days, std::uint64_t seed,
                            const SynthProfile& profile) {
  if (days < 1) {
    throw std::invalid_argument("synth_generate: days must be >= 1");
  }
  HarvestTrace trace;
  trace.origin = TraceOrigin::kSynthetic;
  trace.hourly_wh.resize(static_cast<std::size_t>(days) * 24, 0.0);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> unit_normal(0.0, 1.0);
  const double sigma = profile.cloud_noise;

  for (int d = 0; d < days; ++d) {
    double cloud = 1.0;
    if (sigma > 0.0) {
      // Mean-one lognormal; one draw per day so the diurnal shape survives.
      cloud = std::exp(sigma * unit_normal(rng) - 0.5 * sigma * sigma);
    }
    const double season =
        1.0 - profile.seasonal_modulation *
                  std::cos(2.0 * std::numbers::pi * d / 365.0);
    const double peak = profile.amplitude_wh * season * cloud;
    for (int h = 6; h < 18; ++h) {
      trace.hourly_wh[static_cast<std::size_t>(d) * 24 + h] =
          peak * std::sin(std::numbers::pi * (h - 6) / 12.0);
    }
  }
  return trace;
}

ForecastTrace make_forecast(const HarvestTrace& trace, double noise_fraction,
                            std::uint64_t seed) {
  if (noise_fraction < 0.0) {
    throw std::invalid_argument("make_forecast: noise_fraction must be >= 0");
  }
  ForecastTrace fc;
  fc.noise_fraction = noise_fraction;
  fc.seed = seed;
  const std::size_t days = trace.full_days();
  fc.daily_wh.reserve(days);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-noise_fraction,
                                               noise_fraction);
  for (std::size_t d = 0; d < days; ++d) {
    double value = trace.day_total_wh(d);
    if (noise_fraction > 0.0) {
      value = std::max(0.0, value * (1.0 + noise(rng)));
    }
    fc.daily_wh.push_back(value);
  }
  return fc;
}

}  // namespace harvestrl
