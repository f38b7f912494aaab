#ifndef AFTERSHOCK_OMORI_HPP
#define AFTERSHOCK_OMORI_HPP

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aftershock/series.hpp"
#include "aftershock/shockdetect.hpp"

namespace aftershock {

// Aftershock rate n(t) = K (t + tau)^-p. Requires tau > 0.
double omori_rate(double t, double K, double p, double tau);

// Cumulative count N(t) = K [(t+tau)^(1-p) - tau^(1-p)] / (1-p), with the
// K ln(t/tau + 1) branch at p = 1. Evaluated through expm1/log1p so the
// two branches join continuously; N(0) = 0 exactly.
double omori_cumulative(double t, double K, double p, double tau);

// Small-t slope K tau^-p of the cumulative curve; identical to the rate at 0.
double linear_limit_slope(double K, double p, double tau);

// Cumulative exceedance counts over a shock impact window, offsets 1..T.
struct CountCurve {
    std::vector<int> counts;  // counts[i] = N(i+1)
    double theta = 0.0;
    double theta_over_sigma = 0.0;
    Timestamp shock_t0{};
    Window units = Window::day;

    std::size_t length() const { return counts.size(); }
    bool saturated() const;  // N(t) = t throughout
    bool constant() const;   // no increment after t = 1
};

// N(t) = #{offsets 1..t with V > theta}, over the window (t0, t1] of the
// shock. Daily series count day offsets; minutely series count consecutive
// in-session minutes of the days after t0 through t1. Strict comparison,
// and the shock interval itself is never counted.
CountCurve count_aftershocks(const VolatilitySeries& vols, const Shock& shock, double theta);

class FitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OmoriFit {
    double K = 0.0;
    double p = 0.0;
    double tau = 0.0;
    double sse = 0.0;
    bool converged = false;
    int iterations = 0;
    std::array<double, 9> sensitivity{};  // J^T J at the solution, (lnK, p, lntau)
    bool quality_warning = false;         // p far outside [0,4] or tau > 100 T
};

struct FitOptions {
    int max_iterations = 200;
    bool grid_restarts = true;  // coarse (p, tau) restart grid on top of the base start
};

// Nonlinear least squares on the cumulative curve, equal weights, K and tau
// kept positive through log reparameterization. `curve[i]` is N(i+1).
// Throws FitError for degenerate input (fewer than 4 points or constant N).
OmoriFit fit_omori(std::span<const double> curve,
                   std::optional<std::array<double, 3>> init = std::nullopt,
                   const FitOptions& options = {});

OmoriFit fit_omori(const CountCurve& curve,
                   std::optional<std::array<double, 3>> init = std::nullopt,
                   const FitOptions& options = {});

struct SweepRow {
    Timestamp t0{};
    double theta_over_sigma = 0.0;
    double theta = 0.0;
    CountCurve curve;
    std::optional<OmoriFit> fit;    // absent for degenerate thresholds
    std::string flag;               // "", "saturated", "constant", "short", "quality"
};

// One (CountCurve, OmoriFit) per threshold multiple; degenerate thresholds
// are flagged instead of fitted. Thresholds must be ascending and non-empty.
std::vector<SweepRow> threshold_sweep(const VolatilitySeries& vols, const Shock& shock,
                                      std::span<const double> theta_over_sigma, double sigma,
                                      const FitOptions& options = {});

}  // namespace aftershock

#endif
