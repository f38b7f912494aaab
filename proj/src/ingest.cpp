#include "aftershock/ingest.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "aftershock/csvio.hpp"

namespace aftershock {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Splits a csv row into exactly three fields; returns false otherwise.
bool split3(std::string_view row, std::string_view out[3]) {
    std::size_t a = row.find(',');
    if (a == std::string_view::npos) return false;
    std::size_t b = row.find(',', a + 1);
    if (b == std::string_view::npos) return false;
    if (row.find(',', b + 1) != std::string_view::npos) return false;
    out[0] = trim(row.substr(0, a));
    out[1] = trim(row.substr(a + 1, b - a - 1));
    out[2] = trim(row.substr(b + 1));
    return true;
}

ParsedSeries parse_core(std::string_view text, const TradingCalendar& calendar, TimeBasis basis) {
    ParsedSeries out;
    PriceSeries& series = out.series;
    ParseReport& report = out.report;
    series.basis = basis;
    series.delta_sec = 60;

    std::size_t pos = 0, line_no = 0;
    bool have_header = false;
    Days cur_day{};
    bool have_day = false;
    std::int32_t prev_sec = -1;

    // Date strings repeat for whole day runs; cache the last conversion.
    std::string cached_date_text;
    Days cached_date{};

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                              : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        std::string_view row = trim(raw);
        if (row.empty()) {
            if (pos > text.size()) break;
            continue;
        }

        if (!have_header) {
            std::string_view f[3];
            if (!split3(row, f) || f[0] != "date" || f[1] != "time" || f[2] != "price")
                throw ParseError(line_no, "expected header date,time,price");
            have_header = true;
            continue;
        }

        ++report.rows_total;
        std::string_view f[3];
        if (!split3(row, f)) throw ParseError(line_no, "expected 3 fields date,time,price");

        Days day{};
        if (f[0] == cached_date_text && !cached_date_text.empty()) {
            day = cached_date;
        } else {
            auto parsed = parse_date(f[0]);
            if (!parsed) throw ParseError(line_no, "bad date '" + std::string(f[0]) + "'");
            day = *parsed;
            cached_date_text = std::string(f[0]);
            cached_date = day;
        }

        auto sec = parse_time(f[1]);
        if (!sec) throw ParseError(line_no, "bad time '" + std::string(f[1]) + "'");

        double price = 0.0;
        auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), price);
        if (ec != std::errc{} || ptr != f[2].data() + f[2].size() || !std::isfinite(price))
            throw ParseError(line_no, "bad price '" + std::string(f[2]) + "'");
        if (price <= 0.0) throw ParseError(line_no, "non-positive price");

        if (!calendar.has_date(day))
            throw ParseError(line_no, "date " + format_date(day) + " not in trading calendar");

        if (have_day && day < cur_day)
            throw ParseError(line_no, "date " + format_date(day) + " out of order");

        if (basis == TimeBasis::clock) {
            if (!calendar.on_bar_grid(*sec)) {
                if (calendar.in_session(*sec))
                    ++report.rejected_off_grid;
                else
                    ++report.rejected_out_of_session;
                continue;
            }
        } else if (!calendar.in_session(*sec)) {
            ++report.rejected_out_of_session;
            continue;
        }

        if (!have_day || day > cur_day) {
            series.day_start.push_back(series.times.size());
            cur_day = day;
            have_day = true;
            prev_sec = -1;
        } else {
            bool ok = basis == TimeBasis::clock ? *sec > prev_sec : *sec >= prev_sec;
            if (!ok)
                throw ParseError(line_no, "timestamp " + format_time(*sec, true) +
                                              " out of order within " + format_date(day));
        }
        prev_sec = *sec;
        series.times.push_back(Timestamp{day, *sec});
        series.prices.push_back(price);
        ++report.rows_accepted;
    }

    if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
    series.day_start.push_back(series.times.size());

    if (const auto& dates = calendar.dates(); dates && !series.times.empty()) {
        Days first = series.times.front().day, last = series.times.back().day;
        for (Days d : *dates) {
            if (d < first || d > last) continue;
            bool seen = false;
            for (std::size_t i = 0; i < series.days() && !seen; ++i)
                seen = series.date_of_day(i) == d;
            if (!seen)
                report.warnings.push_back("calendar date " + format_date(d) + " has no rows");
        }
    }
    return out;
}

}  // namespace

ParsedSeries parse_minute_bars(std::string_view text, const TradingCalendar& calendar) {
    return parse_core(text, calendar, TimeBasis::clock);
}

ParsedSeries parse_event_quotes(std::string_view text, const TradingCalendar& calendar) {
    return parse_core(text, calendar, TimeBasis::event);
}

std::string load_text_file(const std::string& path) {
    if (path.size() > 3 && path.ends_with(".gz")) {
        gzFile gz = gzopen(path.c_str(), "rb");
        if (!gz) throw std::runtime_error("cannot open " + path);
        std::string out;
        char buf[1 << 16];
        int n;
        while ((n = gzread(gz, buf, sizeof buf)) > 0) out.append(buf, std::size_t(n));
        bool bad = n < 0;
        gzclose(gz);
        if (bad) throw std::runtime_error("gzip error reading " + path);
        return out;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return out;
}

std::string to_canonical_csv(const PriceSeries& series) {
    std::string out = "date,time,price\n";
    bool with_seconds = series.basis == TimeBasis::event;
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += format_date(series.times[i].day);
        out += ',';
        out += format_time(series.times[i].sec, with_seconds);
        out += ',';
        out += format_double(series.prices[i]);
        out += '\n';
    }
    return out;
}

ValidationReport validate_series(const PriceSeries& series, const TradingCalendar& calendar) {
    ValidationReport report;
    report.basis = series.basis;
    report.days = series.days();
    report.observations = series.size();

    for (std::size_t d = 0; d < series.days(); ++d) {
        DayValidation dv;
        dv.date = series.date_of_day(d);
        dv.observations = series.day_length(d);
        if (series.basis == TimeBasis::clock) {
            const auto& grid = calendar.bar_grid();
            std::size_t i = series.day_begin(d);
            for (std::int32_t want : grid) {
                while (i < series.day_end(d) && series.times[i].sec < want) ++i;
                if (i == series.day_end(d) || series.times[i].sec != want) {
                    ++dv.gaps;
                    report.gaps.push_back(Timestamp{dv.date, want});
                }
            }
        }
        for (std::size_t i = series.day_begin(d); i < series.day_end(d); ++i) {
            bool ok = series.basis == TimeBasis::clock ? calendar.on_bar_grid(series.times[i].sec)
                                                       : calendar.in_session(series.times[i].sec);
            if (!ok) ++report.out_of_session;
        }
        report.gap_count += dv.gaps;
        report.per_day.push_back(dv);
    }
    return report;
}

std::string ValidationReport::to_json() const {
    nlohmann::ordered_json j;
    j["basis"] = basis == TimeBasis::clock ? "clock" : "event";
    j["days"] = days;
    j["observations"] = observations;
    j["gap_count"] = gap_count;
    j["out_of_session"] = out_of_session;
    auto gap_list = nlohmann::ordered_json::array();
    for (const auto& g : gaps) gap_list.push_back(format_timestamp(g, false));
    j["gaps"] = std::move(gap_list);
    auto day_list = nlohmann::ordered_json::array();
    for (const auto& dv : per_day) {
        nlohmann::ordered_json e;
        e["date"] = format_date(dv.date);
        e["observations"] = dv.observations;
        e["gaps"] = dv.gaps;
        day_list.push_back(std::move(e));
    }
    j["per_day"] = std::move(day_list);
    return j.dump(2) + "\n";
}

}  // namespace aftershock
