// SPDX-License-Identifier: Apache-2.0
// mixfirst — passive mixer-first receiver modeling toolkit.
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mixfirst/cli_commands.hpp"
#include "mixfirst/errors.hpp"
#include "mixfirst/run_config.hpp"
#include "mixfirst/si_units.hpp"

namespace {

struct cli_state {
  std::string config_path;
  std::string out_path;
  std::string fmin, fmax;  // SI strings, e.g. 0.95GHz
  int points = 0;
  std::string gm_csv;
  std::string dump_ts;
};

void add_common_options(CLI::App* cmd, cli_state& st) {
  cmd->add_option("--config", st.config_path, "config file (key = value)");
  cmd->add_option("--out", st.out_path, "output path (default: stdout)");
}

void add_grid_options(CLI::App* cmd, cli_state& st) {
  cmd->add_option("--fmin", st.fmin, "sweep start, SI value (e.g. 0.95GHz)");
  cmd->add_option("--fmax", st.fmax, "sweep stop, SI value");
  cmd->add_option("--points", st.points, "sweep point count");
}

mixfirst::run_config effective_config(const cli_state& st) {
  mixfirst::run_config c;
  if (!st.config_path.empty())
    c = mixfirst::load_config_file(st.config_path);
  if (!st.fmin.empty()) c.f_start_hz = mixfirst::parse_si_value(st.fmin);
  if (!st.fmax.empty()) c.f_stop_hz = mixfirst::parse_si_value(st.fmax);
  if (st.points > 0) c.n_points = st.points;
  if (!st.out_path.empty()) c.out_path = st.out_path;
  return c;
}

std::vector<double> parse_gm_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) out.push_back(mixfirst::parse_si_value(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"passive mixer-first receiver modeling toolkit"};
  app.require_subcommand(1);
  cli_state st;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "input impedance and S11 over a frequency grid (CSV)");
  add_common_options(sweep, st);
  add_grid_options(sweep, st);

  CLI::App* ladder = app.add_subcommand(
      "gm-ladder", "one sweep curve per gm setting (long-format CSV)");
  add_common_options(ladder, st);
  add_grid_options(ladder, st);
  ladder->add_option("--gm", st.gm_csv, "comma-separated gm list (e.g. 0,1.73mS,3.46mS)")
      ->required();

  CLI::App* tune = app.add_subcommand(
      "tune", "set gm for a target center frequency and report the match");
  add_common_options(tune, st);

  CLI::App* trim = app.add_subcommand(
      "trim", "tune, then pick the switch-bank mask with the best S11");
  add_common_options(trim, st);

  CLI::App* validate = app.add_subcommand(
      "validate", "run model-vs-simulator and sanity checks (PASS/WARN/FAIL)");
  add_common_options(validate, st);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "measure Z_in with the time-domain simulator");
  add_common_options(oracle, st);
  oracle->add_option("--dump-ts", st.dump_ts, "write the raw time series CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mixfirst::exit_config_error;
  }

  try {
    const mixfirst::run_config c = effective_config(st);
    if (sweep->parsed()) return mixfirst::cmd_sweep(c, std::cout);
    if (ladder->parsed())
      return mixfirst::cmd_gm_ladder(c, parse_gm_list(st.gm_csv), std::cout);
    if (tune->parsed()) return mixfirst::cmd_tune(c, std::cout);
    if (trim->parsed()) return mixfirst::cmd_trim(c, std::cout);
    if (validate->parsed()) return mixfirst::cmd_validate(c, std::cout);
    if (oracle->parsed()) {
      const std::optional<std::string> dump =
          st.dump_ts.empty() ? std::nullopt
                             : std::optional<std::string>(st.dump_ts);
      return mixfirst::cmd_oracle(c, dump, std::cout);
    }
    std::cerr << "error: no subcommand selected\n";
    return mixfirst::exit_config_error;
  } catch (const mixfirst::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mixfirst::exit_config_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mixfirst::exit_config_error;
  } catch (const mixfirst::model_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mixfirst::exit_validation_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mixfirst::exit_validation_failure;
  }
}
