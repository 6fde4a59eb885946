// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mixfirst {

// Base for runtime failures of the model or the simulator. Contract misuse
// (bad constructor arguments, malformed grids) throws std::invalid_argument
// instead and is not part of this hierarchy.
struct model_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested RF frequency is outside |f - f_lo| < f_lo/2 where the translated
// single-sideband model holds.
struct out_of_validity_window : model_error {
  using model_error::model_error;
};

// 1 + j*gm*Z_bb vanished; only possible for non-passive baseband networks.
struct division_degenerate : model_error {
  using model_error::model_error;
};

// A TIA operation needed the baseband shunt capacitor and none was configured.
struct missing_cbb : model_error {
  using model_error::model_error;
};

// Simulator step size violates dt <= 1/(64*f_lo).
struct step_too_large : model_error {
  using model_error::model_error;
};

// The last two measurement windows disagree by more than 1%.
struct not_settled : model_error {
  using model_error::model_error;
};

// |z + ra| vanished in the reflection-coefficient denominator.
struct degenerate_denominator : model_error {
  using model_error::model_error;
};

// Requested tuning offset cannot be realized by the gm stage.
struct offset_out_of_range : model_error {
  using model_error::model_error;
};

// Malformed or inconsistent run configuration (CLI layer maps this to exit 1).
struct config_error : model_error {
  using model_error::model_error;
};

}  // namespace mixfirst
