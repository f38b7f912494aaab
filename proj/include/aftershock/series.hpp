#ifndef AFTERSHOCK_SERIES_HPP
#define AFTERSHOCK_SERIES_HPP

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aftershock {

using Days = std::chrono::sys_days;

// Calendar date plus second-of-day. Event-time series carry real clock
// stamps too; the event index is simply the position in the series.
struct Timestamp {
    Days day{};
    std::int32_t sec = 0;

    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

std::string format_date(Days day);
std::string format_time(std::int32_t sec, bool with_seconds);
std::string format_timestamp(const Timestamp& ts, bool with_seconds);

// Strict parsers; return nullopt on any malformation.
std::optional<Days> parse_date(std::string_view text);          // YYYY-MM-DD
std::optional<std::int32_t> parse_time(std::string_view text);  // HH:MM[:SS]

enum class TimeBasis { clock, event };

// Day-partitioned index level observations. `day_start` has one entry per
// trading day plus a final sentinel equal to size().
struct PriceSeries {
    TimeBasis basis = TimeBasis::clock;
    std::int32_t delta_sec = 60;  // grid step in clock basis
    std::vector<Timestamp> times;
    std::vector<double> prices;
    std::vector<std::size_t> day_start;

    std::size_t size() const { return times.size(); }
    std::size_t days() const { return day_start.empty() ? 0 : day_start.size() - 1; }
    std::size_t day_begin(std::size_t d) const { return day_start[d]; }
    std::size_t day_end(std::size_t d) const { return day_start[d + 1]; }
    std::size_t day_length(std::size_t d) const { return day_end(d) - day_begin(d); }
    Days date_of_day(std::size_t d) const { return times[day_start[d]].day; }

    friend bool operator==(const PriceSeries&, const PriceSeries&) = default;
};

struct ReturnSeries {
    TimeBasis basis = TimeBasis::clock;
    bool overnight_excluded = true;
    std::vector<Timestamp> times;  // right endpoint of each return interval
    std::vector<double> values;
    std::vector<std::size_t> day_start;  // same sentinel convention

    std::size_t size() const { return values.size(); }
    std::size_t days() const { return day_start.empty() ? 0 : day_start.size() - 1; }
    std::span<const double> day_values(std::size_t d) const {
        return {values.data() + day_start[d], day_start[d + 1] - day_start[d]};
    }
    Days date_of_day(std::size_t d) const;
};

enum class Window { day, minute };
enum class SigmaKind { stddev, mean };

// Realized volatility per aggregation window. Labels are the window right
// edges: midnight stamp for daily windows, closing minute for minutely ones.
// `empty_window` marks windows that contained no returns (V forced to 0).
struct VolatilitySeries {
    Window window = Window::day;
    std::vector<Timestamp> labels;
    std::vector<double> values;
    std::vector<std::uint8_t> empty_window;
    std::vector<std::size_t> day_start;  // partition of windows by trading day

    std::optional<double> sigma;  // filled once sample_sigma has been run
    SigmaKind sigma_kind = SigmaKind::stddev;

    std::size_t size() const { return values.size(); }
    std::size_t days() const { return day_start.empty() ? 0 : day_start.size() - 1; }
};

}  // namespace aftershock

#endif
