#ifndef AFTERSHOCK_VOLATILITY_HPP
#define AFTERSHOCK_VOLATILITY_HPP

#include "aftershock/calendar.hpp"
#include "aftershock/series.hpp"

namespace aftershock {

// r(t) = ln I(t) - ln I(t - dt) for consecutive observations. With
// exclude_overnight set, pairs straddling a day boundary are dropped;
// intraday pairs spanning gaps or the lunch break are kept.
ReturnSeries log_returns(const PriceSeries& series, bool exclude_overnight);

// V = sqrt(sum of squared returns) per aggregation window. Daily windows
// cover one trading day; minutely windows cover one close-of-minute interval
// on the calendar bar ladder. Windows with no returns get V = 0 and an
// empty-window flag so the series stays aligned with the calendar.
VolatilitySeries realized_volatility(const ReturnSeries& returns, Window window,
                                     const TradingCalendar& calendar = TradingCalendar::standard());

// Dispersion statistic over the full sample, main shocks included.
// stddev uses the n-1 normalization.
double sample_sigma(const VolatilitySeries& vols, SigmaKind kind);

// Kahan-Babuska compensated accumulation.
class CompensatedSum {
  public:
    void add(double x);
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace aftershock

#endif
