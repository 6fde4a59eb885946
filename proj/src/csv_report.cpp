// SPDX-License-Identifier: Apache-2.0
#include "mixfirst/csv_report.hpp"

#include <complex>

#include "mixfirst/matching.hpp"
#include "mixfirst/si_units.hpp"

namespace mixfirst {

namespace {

void write_point_row(std::ostream& os, const response_point& p,
                     double ra_ohm) {
  os << format_sci9(p.f_hz) << ',' << format_sci9(p.value.real()) << ','
     << format_sci9(p.value.imag()) << ',' << format_sci9(std::abs(p.value))
     << ',' << format_sci9(s11_db(s11(p.value, ra_ohm))) << '\n';
}

}  // namespace

void write_sweep_csv(std::ostream& os, const frequency_response& fr,
                     double ra_ohm) {
  os << "f_hz,re_zin_ohm,im_zin_ohm,mag_zin_ohm,s11_db\n";
  for (const response_point& p : fr.points) write_point_row(os, p, ra_ohm);
}

void write_ladder_csv(
    std::ostream& os,
    const std::vector<std::pair<double, frequency_response>>& curves,
    double ra_ohm) {
  os << "gm_s,f_hz,re_zin_ohm,im_zin_ohm,mag_zin_ohm,s11_db\n";
  for (const auto& [gm, fr] : curves)
    for (const response_point& p : fr.points) {
      os << format_sci9(gm) << ',';
      write_point_row(os, p, ra_ohm);
    }
}

void write_trace_csv(std::ostream& os, const sim_trace& tr) {
  os << "t_s,v_rf_v,v_bb0_v,v_bb1_v,v_bb2_v,v_bb3_v,i_source_a\n";
  for (std::size_t i = 0; i < tr.t_s.size(); ++i) {
    os << format_sci9(tr.t_s[i]);
    for (double v : tr.v[i]) os << ',' << format_sci9(v);
    os << ',' << format_sci9(tr.i_source_a[i]) << '\n';
  }
}

}  // namespace mixfirst
