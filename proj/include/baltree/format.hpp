#pragma once

#include <string>

namespace baltree {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace baltree
