#ifndef AFTERSHOCK_INGEST_HPP
#define AFTERSHOCK_INGEST_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aftershock/calendar.hpp"
#include "aftershock/series.hpp"

namespace aftershock {

// Structural failure while reading an input file. `line` is 1-based and
// counts the header line.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Row accounting for one parse. Accepted + rejected counts add up to the
// number of data rows seen.
struct ParseReport {
    std::size_t rows_total = 0;
    std::size_t rows_accepted = 0;
    std::size_t rejected_out_of_session = 0;
    std::size_t rejected_off_grid = 0;  // minute bars not on the bar ladder
    std::vector<std::string> warnings;

    std::size_t rejected() const { return rejected_out_of_session + rejected_off_grid; }
};

struct ParsedSeries {
    PriceSeries series;
    ParseReport report;
};

// Canonical input: UTF-8 CSV with header `date,time,price`, dates as
// YYYY-MM-DD, times as HH:MM[:SS]. Throws ParseError on malformed rows,
// non-positive prices, out-of-order timestamps, or dates missing from an
// explicit calendar date list.
ParsedSeries parse_minute_bars(std::string_view text, const TradingCalendar& calendar);
ParsedSeries parse_event_quotes(std::string_view text, const TradingCalendar& calendar);

// Reads a whole file into memory; paths ending in .gz are inflated.
std::string load_text_file(const std::string& path);

// Canonical CSV serialization. Clock-basis series emit HH:MM stamps,
// event-basis ones HH:MM:SS; prices round-trip exactly.
std::string to_canonical_csv(const PriceSeries& series);

struct DayValidation {
    Days date{};
    std::size_t observations = 0;
    std::size_t gaps = 0;  // missing bar-grid minutes (clock basis only)
};

struct ValidationReport {
    TimeBasis basis = TimeBasis::clock;
    std::size_t days = 0;
    std::size_t observations = 0;
    std::size_t gap_count = 0;
    std::size_t out_of_session = 0;
    std::vector<Timestamp> gaps;
    std::vector<DayValidation> per_day;

    std::string to_json() const;
};

// Report-only inspection of a series against a calendar; never mutates.
ValidationReport validate_series(const PriceSeries& series, const TradingCalendar& calendar);

}  // namespace aftershock

#endif
