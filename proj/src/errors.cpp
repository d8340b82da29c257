#include "beamsym/errors.hpp"

#include <array>
#include <charconv>

namespace beamsym {

std::string DomainError::format_point(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return ec == std::errc{} ? std::string(buf.data(), end) : std::string("?");
}

}  // namespace beamsym
