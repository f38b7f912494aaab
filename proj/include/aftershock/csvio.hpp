#ifndef AFTERSHOCK_CSVIO_HPP
#define AFTERSHOCK_CSVIO_HPP

#include <string>
#include <string_view>

namespace aftershock {

// Shortest representation that round-trips the exact double (to_chars);
// locale-independent and deterministic. NaN renders as an empty field.
std::string format_double(double v);

}  // namespace aftershock

#endif
