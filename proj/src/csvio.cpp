#include "aftershock/csvio.hpp"

#include <charconv>
#include <cmath>

namespace aftershock {

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace aftershock
