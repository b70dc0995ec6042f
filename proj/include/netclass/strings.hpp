#pragma once

#include <charconv>
#include <string>
#include <string_view>

namespace netclass {

/// Shortest round-trip decimal representation, locale-independent.
inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

/// Fixed-precision formatting for human-facing output (SVG labels, logs).
inline std::string format_double_fixed(double v, int precision) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed,
                    precision);
  (void)ec;
  return std::string(buf, ptr);
}

inline bool parse_double_strict(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace netclass
