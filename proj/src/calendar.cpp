#include "aftershock/calendar.hpp"

#include <algorithm>
#include <stdexcept>

namespace aftershock {

TradingCalendar::TradingCalendar(std::vector<Session> sessions,
                                 std::optional<std::vector<Days>> dates)
    : sessions_(std::move(sessions)), dates_(std::move(dates)) {
    if (sessions_.empty()) throw std::invalid_argument("calendar needs at least one session");
    for (std::size_t i = 0; i < sessions_.size(); ++i) {
        const auto& s = sessions_[i];
        if (s.open_sec < 0 || s.close_sec <= s.open_sec || s.close_sec > 24 * 3600)
            throw std::invalid_argument("invalid session bounds");
        if (i > 0 && s.open_sec < sessions_[i - 1].close_sec)
            throw std::invalid_argument("sessions overlap or are out of order");
    }
    if (dates_ && !std::is_sorted(dates_->begin(), dates_->end()))
        throw std::invalid_argument("calendar dates must be ascending");
    for (const auto& s : sessions_) {
        // First whole minute strictly after the open.
        for (std::int32_t t = (s.open_sec / 60 + 1) * 60; t <= s.close_sec; t += 60)
            grid_.push_back(t);
    }
}

TradingCalendar TradingCalendar::standard() {
    return TradingCalendar{{Session{9 * 3600 + 30 * 60, 11 * 3600 + 30 * 60},
                            Session{13 * 3600, 15 * 3600}}};
}

TradingCalendar TradingCalendar::single_session(int minutes) {
    if (minutes < 1) throw std::invalid_argument("session needs at least one minute");
    std::int32_t open = 9 * 3600 + 30 * 60;
    return TradingCalendar{{Session{open, open + minutes * 60}}};
}

bool TradingCalendar::has_date(Days day) const {
    if (!dates_) return true;
    return std::binary_search(dates_->begin(), dates_->end(), day);
}

bool TradingCalendar::in_session(std::int32_t sec) const {
    for (const auto& s : sessions_)
        if (sec >= s.open_sec && sec <= s.close_sec) return true;
    return false;
}

bool TradingCalendar::on_bar_grid(std::int32_t sec) const {
    if (sec % 60 != 0) return false;
    for (const auto& s : sessions_)
        if (sec > s.open_sec && sec <= s.close_sec) return true;
    return false;
}

}  // namespace aftershock
