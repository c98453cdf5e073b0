#include "altdesc/config.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace altdesc {

namespace {

void read_env(const char* name, int& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw std::invalid_argument(std::string(name) + ": expected a non-negative integer, got '" +
                                raw + "'");
  }
  out = value;
}

}  // namespace

EnumerationBounds EnumerationBounds::from_env() {
  EnumerationBounds b;
  read_env("ALTDESC_ENUM_BOUND_A", b.type_a);
  read_env("ALTDESC_ENUM_BOUND_B", b.type_b);
  return b;
}

}  // namespace altdesc
