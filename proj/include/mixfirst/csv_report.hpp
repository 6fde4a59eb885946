// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "mixfirst/frequency_response.hpp"
#include "mixfirst/oracle_sim.hpp"

namespace mixfirst {

// f_hz,re_zin_ohm,im_zin_ohm,mag_zin_ohm,s11_db — one row per grid point,
// ascending frequency, 9-significant-digit scientific notation.
void write_sweep_csv(std::ostream& os, const frequency_response& fr,
                     double ra_ohm);

// Long format: gm_s column prepended, one block of rows per curve.
void write_ladder_csv(
    std::ostream& os,
    const std::vector<std::pair<double, frequency_response>>& curves,
    double ra_ohm);

// t_s,v_rf_v,v_bb0_v,v_bb1_v,v_bb2_v,v_bb3_v,i_source_a.
void write_trace_csv(std::ostream& os, const sim_trace& tr);

}  // namespace mixfirst
