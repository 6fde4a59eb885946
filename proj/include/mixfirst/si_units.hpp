// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace mixfirst {

// Parses "55pF", "3.46mS", "1GHz", "0.25", "1e9" and the like. The SI prefix
// scales the value; a trailing unit word (Hz, ohm, F, S, V, A, s, W) is
// accepted and ignored. Throws std::invalid_argument on anything else.
double parse_si_value(std::string_view text);

// 9 significant digits, scientific: the CSV number format.
std::string format_sci9(double v);

// Shortest round-trip-exact representation for config serialization.
std::string format_exact(double v);

}  // namespace mixfirst
