// SPDX-License-Identifier: Apache-2.0
#include "mixfirst/si_units.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace mixfirst {

namespace {

bool is_unit_word(std::string_view s) {
  static constexpr std::array<std::string_view, 12> units = {
      "Hz", "hz", "ohm", "Ohm", "ohms", "F", "S", "V", "A", "s", "W", "Ω"};
  for (const auto u : units)
    if (s == u) return true;
  return false;
}

bool prefix_scale(std::string_view s, double& scale, std::size_t& len) {
  if (s.empty()) return false;
  len = 1;
  switch (s.front()) {
    case 'f': scale = 1e-15; return true;
    case 'p': scale = 1e-12; return true;
    case 'n': scale = 1e-9; return true;
    case 'u': scale = 1e-6; return true;
    case 'm': scale = 1e-3; return true;
    case 'k': scale = 1e3; return true;
    case 'M': scale = 1e6; return true;
    case 'G': scale = 1e9; return true;
    case 'T': scale = 1e12; return true;
    default: break;
  }
  if (s.size() >= 2 && static_cast<unsigned char>(s[0]) == 0xc2 &&
      static_cast<unsigned char>(s[1]) == 0xb5) {  // UTF-8 micro sign
    scale = 1e-6;
    len = 2;
    return true;
  }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_si_value(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty numeric value");

  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data())
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");

  std::string_view suffix =
      trim(s.substr(static_cast<std::size_t>(ptr - s.data())));
  if (suffix.empty()) return value;

  double scale = 1.0;
  std::size_t len = 0;
  if (prefix_scale(suffix, scale, len)) {
    const std::string_view rest = suffix.substr(len);
    if (rest.empty() || is_unit_word(rest)) return value * scale;
  }
  if (is_unit_word(suffix)) return value;
  throw std::invalid_argument("unknown unit suffix: '" + std::string(text) + "'");
}

std::string format_sci9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace mixfirst
