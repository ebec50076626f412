#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace sasv {

/// Shortest decimal text that reads back to the same double; infinities
/// render as `inf` / `-inf`.
std::string format_real(double x);

/// printf-style `%.<digits>g`, with `-inf` / `inf` for infinities.
std::string format_sig(double x, int digits);

/// Fixed-point with `decimals` digits after the point.
std::string format_fixed(double x, int decimals);

/// Locale-independent decimal parse of the whole token (a leading '+' is
/// accepted). Returns nullopt on any trailing garbage.
std::optional<double> parse_real(std::string_view token);

} // namespace sasv
