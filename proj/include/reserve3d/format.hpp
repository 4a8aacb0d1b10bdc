#pragma once

#include <string>

namespace reserve3d {

// Shortest decimal text that parses back to the identical double.
std::string format_double(double value);

} // namespace reserve3d
