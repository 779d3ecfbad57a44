#include "galmann/numformat.hpp"

#include <array>
#include <charconv>

namespace galmann {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

} // namespace galmann
