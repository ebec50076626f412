#include "sasv/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace sasv {

std::string format_real(double x) {
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    if (std::isnan(x)) return "nan";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

std::string format_sig(double x, int digits) {
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                   std::chars_format::general, digits);
    return std::string(buf.data(), ptr);
}

std::string format_fixed(double x, int decimals) {
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    std::array<char, 400> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                   std::chars_format::fixed, decimals);
    return std::string(buf.data(), ptr);
}

std::optional<double> parse_real(std::string_view token) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    if (token.empty()) return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return v;
}

} // namespace sasv
