// SPDX-License-Identifier: Apache-2.0
#include "mixfirst/frequency_response.hpp"

#include <cmath>
#include <stdexcept>

namespace mixfirst {

void validate(const frequency_response& fr) {
  for (std::size_t i = 0; i < fr.points.size(); ++i) {
    const auto& p = fr.points[i];
    if (!std::isfinite(p.f_hz) || !std::isfinite(p.value.real()) ||
        !std::isfinite(p.value.imag()))
      throw std::invalid_argument("frequency_response: non-finite entry at index " +
                                  std::to_string(i));
    if (i > 0 && !(fr.points[i - 1].f_hz < p.f_hz))
      throw std::invalid_argument("frequency_response: grid not strictly increasing at index " +
                                  std::to_string(i));
  }
}

const response_point& peak_magnitude_point(const frequency_response& fr) {
  if (fr.points.empty())
    throw std::invalid_argument("frequency_response: empty response has no peak");
  const response_point* best = &fr.points[0];
  double best_mag = std::abs(best->value);
  for (const auto& p : fr.points) {
    const double m = std::abs(p.value);
    if (m > best_mag) {
      best = &p;
      best_mag = m;
    }
  }
  return *best;
}

}  // namespace mixfirst
