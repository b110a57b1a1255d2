#include "baltree/format.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace baltree {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

}  // namespace baltree
