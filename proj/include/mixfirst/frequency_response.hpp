// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace mixfirst {

// Per-point status bits. A flagged point still carries a finite value; sweeps
// never abort half way through a grid.
namespace point_flag {
inline constexpr unsigned out_of_validity_window = 1u << 0;
inline constexpr unsigned nonfinite_baseband = 1u << 1;
}  // namespace point_flag

struct response_point {
  double f_hz = 0.0;
  std::complex<double> value;
  unsigned flags = 0;
};

// Sampled complex response on a strictly increasing frequency grid.
struct frequency_response {
  std::vector<response_point> points;
  std::string unit = "ohm";

  std::size_t size() const { return points.size(); }
  const response_point& operator[](std::size_t i) const { return points[i]; }
};

// Throws std::invalid_argument unless the grid is strictly increasing and
// every value is finite.
void validate(const frequency_response& fr);

// Point with the largest |value|; first such point on ties.
const response_point& peak_magnitude_point(const frequency_response& fr);

}  // namespace mixfirst
