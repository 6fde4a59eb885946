// SPDX-License-Identifier: Apache-2.0
#include "mixfirst/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <system_error>

#include "mixfirst/complex_impedance.hpp"
#include "mixfirst/errors.hpp"
#include "mixfirst/si_units.hpp"

namespace mixfirst {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_line(int line_no, const std::string& why) {
  throw config_error("config line " + std::to_string(line_no) + ": " + why);
}

double parse_number(std::string_view value, int line_no) {
  try {
    return parse_si_value(value);
  } catch (const std::invalid_argument& e) {
    bad_line(line_no, e.what());
  }
}

int parse_count(std::string_view value, int line_no) {
  int out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    bad_line(line_no, "expected a plain integer, got '" + std::string(value) +
                          "'");
  return out;
}

bool parse_bool(std::string_view value, int line_no) {
  if (value == "true") return true;
  if (value == "false") return false;
  bad_line(line_no, "expected true or false, got '" + std::string(value) + "'");
}

baseband_kind parse_kind(std::string_view value, int line_no) {
  if (value == "plain_r") return baseband_kind::plain_r;
  if (value == "plain_rc") return baseband_kind::plain_rc;
  if (value == "complex_rc") return baseband_kind::complex_rc;
  if (value == "complex_tia") return baseband_kind::complex_tia;
  bad_line(line_no, "unknown baseband kind '" + std::string(value) + "'");
}

shift_sign parse_shift(std::string_view value, int line_no) {
  if (value == "up") return shift_sign::up;
  if (value == "down") return shift_sign::down;
  bad_line(line_no, "shift must be up or down, got '" + std::string(value) +
                        "'");
}

const char* kind_name(baseband_kind k) {
  switch (k) {
    case baseband_kind::plain_r: return "plain_r";
    case baseband_kind::plain_rc: return "plain_rc";
    case baseband_kind::complex_rc: return "complex_rc";
    case baseband_kind::complex_tia: return "complex_tia";
  }
  return "complex_rc";
}

}  // namespace

run_config parse_config(std::string_view text) {
  run_config c;
  std::string section;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') bad_line(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "mixer" && section != "baseband" && section != "tia" &&
          section != "sweep" && section != "sim" && section != "bank" &&
          section != "tune" && section != "output")
        bad_line(line_no, "unknown section [" + section + "]");
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      bad_line(line_no, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      bad_line(line_no, "expected key = value");
    if (section.empty())
      bad_line(line_no, "key '" + key + "' appears before any [section]");

    const auto num = [&] { return parse_number(value, line_no); };
    bool known = true;
    if (section == "mixer") {
      if (key == "ra") c.ra_ohm = num();
      else if (key == "rsw") c.rsw_ohm = num();
      else if (key == "f_lo") c.f_lo_hz = num();
      else known = false;
    } else if (section == "baseband") {
      if (key == "kind") c.kind = parse_kind(value, line_no);
      else if (key == "r_bb") c.r_bb_ohm = num();
      else if (key == "c_bb") c.c_bb_f = num();
      else if (key == "gm") c.gm_s = num();
      else if (key == "gm_bandwidth") c.gm_bandwidth_hz = num();
      else if (key == "shift") c.shift = parse_shift(value, line_no);
      else known = false;
    } else if (section == "tia") {
      if (key == "gm1") c.tia.gm1_s = num();
      else if (key == "gm2") c.tia.gm2_s = num();
      else if (key == "ro1") c.tia.ro1_ohm = num();
      else if (key == "ro2") c.tia.ro2_ohm = num();
      else if (key == "rl") c.tia.rl_ohm = num();
      else if (key == "cl") c.tia.cl_f = num();
      else if (key == "r_fb") c.tia.r_fb_ohm = num();
      else if (key == "ideal_buffer") c.tia.ideal_buffer = parse_bool(value, line_no);
      else known = false;
    } else if (section == "sweep") {
      if (key == "f_start") c.f_start_hz = num();
      else if (key == "f_stop") c.f_stop_hz = num();
      else if (key == "n_points") c.n_points = parse_count(value, line_no);
      else known = false;
    } else if (section == "sim") {
      if (key == "amplitude") c.amplitude_v = num();
      else if (key == "f_rf") c.f_rf_hz = num();
      else if (key == "dt") c.dt_s = num();
      else if (key == "settle_periods") c.settle_periods = parse_count(value, line_no);
      else if (key == "measure_periods") c.measure_periods = parse_count(value, line_no);
      else known = false;
    } else if (section == "bank") {
      if (key == "unit_rsw") c.unit_rsw_ohm = num();
      else if (key == "n_units") c.n_units = parse_count(value, line_no);
      else known = false;
    } else if (section == "tune") {
      if (key == "target_f") c.target_f_hz = num();
      else known = false;
    } else if (section == "output") {
      if (key == "path") c.out_path = std::string(value);
      else known = false;
    }
    if (!known)
      bad_line(line_no, "unknown key '" + key + "' in section [" + section + "]");
  }
  return c;
}

run_config load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const run_config& c) {
  std::ostringstream os;
  const auto n = [](double v) { return format_exact(v); };
  os << "[mixer]\n"
     << "ra = " << n(c.ra_ohm) << "\n"
     << "rsw = " << n(c.rsw_ohm) << "\n"
     << "f_lo = " << n(c.f_lo_hz) << "\n\n";
  os << "[baseband]\n"
     << "kind = " << kind_name(c.kind) << "\n"
     << "r_bb = " << n(c.r_bb_ohm) << "\n"
     << "c_bb = " << n(c.c_bb_f) << "\n"
     << "gm = " << n(c.gm_s) << "\n";
  if (c.gm_bandwidth_hz)
    os << "gm_bandwidth = " << n(*c.gm_bandwidth_hz) << "\n";
  os << "shift = " << (c.shift == shift_sign::up ? "up" : "down") << "\n\n";
  os << "[tia]\n"
     << "gm1 = " << n(c.tia.gm1_s) << "\n"
     << "gm2 = " << n(c.tia.gm2_s) << "\n"
     << "ro1 = " << n(c.tia.ro1_ohm) << "\n"
     << "ro2 = " << n(c.tia.ro2_ohm) << "\n"
     << "rl = " << n(c.tia.rl_ohm) << "\n"
     << "cl = " << n(c.tia.cl_f) << "\n"
     << "r_fb = " << n(c.tia.r_fb_ohm) << "\n"
     << "ideal_buffer = " << (c.tia.ideal_buffer ? "true" : "false") << "\n\n";
  os << "[sweep]\n"
     << "f_start = " << n(c.f_start_hz) << "\n"
     << "f_stop = " << n(c.f_stop_hz) << "\n"
     << "n_points = " << c.n_points << "\n\n";
  os << "[sim]\n"
     << "amplitude = " << n(c.amplitude_v) << "\n"
     << "f_rf = " << n(c.f_rf_hz) << "\n"
     << "dt = " << n(c.dt_s) << "\n"
     << "settle_periods = " << c.settle_periods << "\n"
     << "measure_periods = " << c.measure_periods << "\n\n";
  os << "[bank]\n"
     << "unit_rsw = " << n(c.unit_rsw_ohm) << "\n"
     << "n_units = " << c.n_units << "\n\n";
  os << "[tune]\n"
     << "target_f = " << n(c.target_f_hz) << "\n";
  if (!c.out_path.empty()) os << "\n[output]\npath = " << c.out_path << "\n";
  return os.str();
}

mixer_config make_mixer(const run_config& c) {
  return {c.ra_ohm, c.rsw_ohm, c.f_lo_hz};
}

receiver_model build_receiver(const run_config& c) {
  const mixer_config cfg = make_mixer(c);
  switch (c.kind) {
    case baseband_kind::plain_r: {
      if (!(c.r_bb_ohm > 0.0))
        throw config_error("baseband: plain_r needs r_bb > 0");
      const double r = c.r_bb_ohm;
      return compose_receiver(
          cfg, [r](double) { return std::complex<double>(r, 0.0); });
    }
    case baseband_kind::plain_rc: {
      if (!(c.r_bb_ohm > 0.0) || !(c.c_bb_f > 0.0))
        throw config_error("baseband: plain_rc needs r_bb > 0 and c_bb > 0");
      const double r = c.r_bb_ohm, cap = c.c_bb_f;
      return compose_receiver(cfg, [r, cap](double f_hz) {
        const double x = 2.0 * std::numbers::pi * f_hz * r * cap;
        return r / std::complex<double>(1.0, x);
      });
    }
    case baseband_kind::complex_rc: {
      const complex_impedance_spec spec =
          c.gm_bandwidth_hz
              ? complex_impedance_spec(c.r_bb_ohm, c.c_bb_f, c.gm_s,
                                       *c.gm_bandwidth_hz)
              : complex_impedance_spec(c.r_bb_ohm, c.c_bb_f, c.gm_s);
      return compose_receiver(cfg, spec, c.shift);
    }
    case baseband_kind::complex_tia: {
      rgc_params p = c.tia;
      p.c_bb_f = c.c_bb_f;
      return compose_receiver(cfg, p, c.gm_s, c.shift);
    }
  }
  throw config_error("baseband: unknown kind");
}

sim_scenario build_scenario(const run_config& c) {
  sim_scenario s;
  s.cfg = make_mixer(c);
  const double gm_signed =
      c.shift == shift_sign::up ? c.gm_s : -c.gm_s;
  switch (c.kind) {
    case baseband_kind::plain_r:
      s.load = {c.r_bb_ohm, 0.0, 0.0};
      break;
    case baseband_kind::plain_rc:
      s.load = {c.r_bb_ohm, c.c_bb_f, 0.0};
      break;
    case baseband_kind::complex_rc:
      s.load = {c.r_bb_ohm, c.c_bb_f, gm_signed};
      break;
    case baseband_kind::complex_tia: {
      rgc_params p = c.tia;
      validate(p);
      const double r_dc = rgc_input_impedance(p, 0.0).real();
      s.load = {r_dc, c.c_bb_f, gm_signed};
      break;
    }
  }
  s.amplitude_v = c.amplitude_v;
  s.f_rf_hz = c.f_rf_hz;
  s.dt_s = c.dt_s;
  s.settle_periods = c.settle_periods;
  s.measure_periods = c.measure_periods;
  return s;
}

}  // namespace mixfirst
