#ifndef AFTERSHOCK_SIMULATE_HPP
#define AFTERSHOCK_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "aftershock/calendar.hpp"
#include "aftershock/series.hpp"

namespace aftershock {

// mt19937_64 with explicit variate mappings, so identical seeds give
// identical streams on every platform.
class Rng64 {
  public:
    explicit Rng64(std::uint64_t seed) : gen_(seed) {}

    double uniform();                  // [0, 1)
    double exponential(double rate);   // rate > 0
    double normal();                   // standard normal, Box-Muller

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

enum class SimMode { event_times, interval_counts };

struct SimSpec {
    double K = 1.0;
    double p = 1.0;
    double tau = 1.0;
    int horizon = 1;  // T, in intervals
    std::uint64_t seed = 0;
    SimMode mode = SimMode::event_times;
};

struct OmoriEvents {
    std::vector<double> times;        // ascending, in (0, T]
    std::vector<int> interval_counts; // events in (i-1, i], filled for both modes
};

// Inhomogeneous Poisson process with intensity K (t + tau)^-p on (0, T],
// generated by thinning against the t = 0 bound. Requires K > 0, tau > 0,
// T >= 1 and p >= 0 (a negative p grows past the bound).
OmoriEvents simulate_omori_events(const SimSpec& spec);

struct PlantedShock {
    int day = 0;         // 0-based trading-day index
    double magnitude = 1.0;  // multiple of the base volatility
};

// Post-shock exceedance profile: each day t after a planted shock is forced
// to an elevated volatility with probability min(1, K (t+tau)^-p).
struct DecayProfile {
    double K = 0.0;
    double p = 1.0;
    double tau = 1.0;
    double elevated_magnitude = 3.5;
};

struct PlantedSeriesSpec {
    int days = 1;
    int bars_per_day = 240;
    double base_vol = 1e-3;
    double base_dispersion = 0.0;  // lognormal sigma of daily targets
    std::vector<PlantedShock> shocks;
    std::optional<DecayProfile> decay;
    bool exact_volatility = true;  // rescale each day so V hits the target exactly
    std::uint64_t seed = 0;
    Days start_date = Days{std::chrono::year{2004} / 1 / 5};
    double start_price = 1000.0;
};

// Minute-bar price path over consecutive weekdays whose per-day realized
// volatility follows the planted targets. Overnight returns are zero, so the
// daily volatility matches the target whether or not overnight returns are
// excluded downstream. Round-trips through the canonical CSV format.
PriceSeries synthetic_price_series(const PlantedSeriesSpec& spec);

// The calendar matching the generated bar ladder: the standard sessions for
// 240 bars per day, otherwise a single session of bars_per_day minutes.
TradingCalendar planted_calendar(const PlantedSeriesSpec& spec);

}  // namespace aftershock

#endif
