#include "aftershock/series.hpp"

#include <charconv>
#include <cstdio>

namespace aftershock {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return !s.empty();
}

int to_int(std::string_view s) {
    int v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

}  // namespace

std::string format_date(Days day) {
    std::chrono::year_month_day ymd{day};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()));
    return buf;
}

std::string format_time(std::int32_t sec, bool with_seconds) {
    char buf[16];
    if (with_seconds)
        std::snprintf(buf, sizeof buf, "%02d:%02d:%02d", sec / 3600, (sec / 60) % 60, sec % 60);
    else
        std::snprintf(buf, sizeof buf, "%02d:%02d", sec / 3600, (sec / 60) % 60);
    return buf;
}

std::string format_timestamp(const Timestamp& ts, bool with_seconds) {
    return format_date(ts.day) + " " + format_time(ts.sec, with_seconds);
}

std::optional<Days> parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    auto y = text.substr(0, 4), m = text.substr(5, 2), d = text.substr(8, 2);
    if (!all_digits(y) || !all_digits(m) || !all_digits(d)) return std::nullopt;
    std::chrono::year_month_day ymd{std::chrono::year{to_int(y)},
                                    std::chrono::month{unsigned(to_int(m))},
                                    std::chrono::day{unsigned(to_int(d))}};
    if (!ymd.ok()) return std::nullopt;
    return Days{ymd};
}

std::optional<std::int32_t> parse_time(std::string_view text) {
    if (text.size() != 5 && text.size() != 8) return std::nullopt;
    if (text[2] != ':') return std::nullopt;
    auto h = text.substr(0, 2), m = text.substr(3, 2);
    if (!all_digits(h) || !all_digits(m)) return std::nullopt;
    int sec = 0;
    if (text.size() == 8) {
        if (text[5] != ':') return std::nullopt;
        auto s = text.substr(6, 2);
        if (!all_digits(s)) return std::nullopt;
        sec = to_int(s);
    }
    int hh = to_int(h), mm = to_int(m);
    if (hh > 23 || mm > 59 || sec > 59) return std::nullopt;
    return hh * 3600 + mm * 60 + sec;
}

Days ReturnSeries::date_of_day(std::size_t d) const { return times[day_start[d]].day; }

}  // namespace aftershock
