#ifndef AFTERSHOCK_CALENDAR_HPP
#define AFTERSHOCK_CALENDAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "aftershock/series.hpp"

namespace aftershock {

// One intraday trading session, as seconds of day.
struct Session {
    std::int32_t open_sec = 0;
    std::int32_t close_sec = 0;

    friend bool operator==(const Session&, const Session&) = default;
};

// Session hours and (optionally) an explicit list of trading dates. When no
// date list is given, the trading-day list is derived from the data itself.
class TradingCalendar {
  public:
    TradingCalendar() = default;
    explicit TradingCalendar(std::vector<Session> sessions,
                             std::optional<std::vector<Days>> dates = std::nullopt);

    // Two sessions, 09:30-11:30 and 13:00-15:00.
    static TradingCalendar standard();

    // Single session of `minutes` whole minutes starting 09:30.
    static TradingCalendar single_session(int minutes);

    const std::vector<Session>& sessions() const { return sessions_; }
    const std::optional<std::vector<Days>>& dates() const { return dates_; }

    bool has_date(Days day) const;

    // Quotes may arrive anywhere inside a session, bounds included.
    bool in_session(std::int32_t sec) const;

    // Minute bars sit on the session close-of-minute ladder: whole minutes
    // strictly after the open up to and including the close.
    bool on_bar_grid(std::int32_t sec) const;

    // The full ladder for one day, ascending.
    const std::vector<std::int32_t>& bar_grid() const { return grid_; }
    std::size_t bars_per_day() const { return grid_.size(); }

  private:
    std::vector<Session> sessions_;
    std::optional<std::vector<Days>> dates_;
    std::vector<std::int32_t> grid_;
};

}  // namespace aftershock

#endif
