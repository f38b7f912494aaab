#ifndef AFTERSHOCK_SHOCKDETECT_HPP
#define AFTERSHOCK_SHOCKDETECT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "aftershock/series.hpp"

namespace aftershock {

struct Candidate {
    std::size_t day_index = 0;  // position in the daily volatility series
    Timestamp label{};
    double v = 0.0;
};

// A main shock and its impact window.
struct Shock {
    Timestamp t0{};
    Timestamp t1{};
    std::size_t t0_index = 0;
    std::size_t t1_index = 0;
    int duration = 0;      // trading days from t0 (exclusive) to t1 (inclusive)
    double v_max = 0.0;    // volatility at t0
    double v_min = 0.0;    // volatility at t1
    double r0 = 0.0;       // simple daily return on t0 vs previous close; NaN if unknown
};

// The k largest daily volatilities, descending; ties go to the earlier date.
std::vector<Candidate> top_candidates(const VolatilitySeries& daily, std::size_t k);

// Drops every candidate that lies within min_gap trading days of a larger
// one (ties resolved toward the earlier date). Survivors keep descending-V
// order and are pairwise at least min_gap days apart.
std::vector<Candidate> merge_proximate(std::vector<Candidate> candidates, int min_gap);

// Drops shocks with fewer than search_window trading days left after t0.
std::vector<Candidate> exclude_boundary(std::vector<Candidate> shocks,
                                        const VolatilitySeries& daily, int search_window);

// t1 is the day of the minimum volatility over (t0, t0 + search_window];
// the minimum may sit on the window edge. daily_returns, when provided,
// supplies r0 (same indexing as the volatility series).
Shock impact_duration(const VolatilitySeries& daily, std::size_t t0_index, int search_window,
                      std::span<const double> daily_returns = {});

struct DetectorConfig {
    std::size_t top_k = 7;
    int min_gap = 30;
    int search_window = 60;
};

// Full pipeline: top-k, proximity merge, boundary exclusion, impact windows.
// Result is chronological.
std::vector<Shock> detect_shocks(const VolatilitySeries& daily, const DetectorConfig& config,
                                 std::span<const double> daily_returns = {});

}  // namespace aftershock

#endif
