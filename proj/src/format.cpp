#include "reserve3d/format.hpp"

#include <charconv>

namespace reserve3d {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace reserve3d
