// lteu: Wi-Fi channel access inside LTE-U quiet periods.
//
//   lteu access-prob  --config fig5.json
//   lteu mean-delay   --config fig7.json --out fig7.csv
//   lteu quiet-period --mode tdd --tdd-config 0 --mute 2,3,4
//   lteu simulate     --config validate.json --stations 4 --format json
//   lteu validate     --config validate.json --seed 7

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lteu/scenario.hpp"

namespace {

enum ExitCode { kOk = 0, kRuntimeError = 1, kConfigError = 2 };

void report_error(std::string_view kind, const std::string& message,
                  const std::string& where = {}) {
  nlohmann::json err = {{"error", {{"kind", kind}, {"message", message}}}};
  if (!where.empty()) err["error"]["where"] = where;
  std::cerr << err.dump() << "\n";
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw lteu::ConfigError(out, "cannot open output file");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wi-Fi DCF access probability and backoff delay within LTE-U quiet periods"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out = "-";
  std::optional<std::uint64_t> seed;
  lteu::OutputFormat format = lteu::OutputFormat::csv;
  const std::map<std::string, lteu::OutputFormat> formats{{"csv", lteu::OutputFormat::csv},
                                                          {"json", lteu::OutputFormat::json}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Scenario JSON file")->check(CLI::ExistingFile);
    cmd->add_option("--out", out, "Output file, '-' for stdout");
    cmd->add_option("--seed", seed, "Override simulation.seed");
    cmd->add_option("--format", format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* access = app.add_subcommand("access-prob", "Pr{d < L} over the sweep (CSV: N,payload_bytes,L_us,pr_access)");
  auto* mean = app.add_subcommand("mean-delay", "Mean backoff delay (CSV: N,payload_bytes,mean_delay_us)");
  auto* quiet = app.add_subcommand("quiet-period", "Longest LTE quiet period (CSV: mode,max_quiet_us)");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run for one (N, payload) point");
  auto* validate = app.add_subcommand("validate", "Analytic model vs simulation summary (JSON)");
  for (auto* cmd : {access, mean, quiet, simulate, validate}) add_common(cmd);

  std::string mode;
  std::optional<int> tdd_config;
  std::vector<int> mute;
  std::optional<int> pdcch;
  quiet->add_option("--mode", mode, "fdd or tdd")->check(CLI::IsMember({"fdd", "tdd"}));
  quiet->add_option("--tdd-config", tdd_config, "TD-LTE UL/DL configuration (0..6)");
  quiet->add_option("--mute", mute, "Muted uplink subframes, e.g. 2,3,4")->delimiter(',');
  quiet->add_option("--pdcch-symbols", pdcch, "PDCCH span in symbols (1..3)");

  std::optional<int> stations;
  std::optional<std::int64_t> payload;
  simulate->add_option("--stations", stations, "Number of stations (default: first sweep entry)");
  simulate->add_option("--payload", payload, "Payload bytes (default: first sweep entry)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return kConfigError;
  }

  try {
    lteu::ScenarioFile file = config_path.empty() ? lteu::ScenarioFile{}
                                                  : lteu::load_scenario(config_path);
    if (seed) file.simulation.seed = *seed;

    if (*access) {
      emit(lteu::render(lteu::access_prob_rows(file), format), out);
    } else if (*mean) {
      emit(lteu::render(lteu::mean_delay_rows(file), format), out);
    } else if (*quiet) {
      if (mode == "fdd") file.lte.mode = lteu::LteMode::fdd;
      if (mode == "tdd") file.lte.mode = lteu::LteMode::tdd;
      if (pdcch) file.lte.fdd.pdcch_symbols = *pdcch;
      if (tdd_config) {
        file.lte.tdd.config_index = *tdd_config;
        file.lte.tdd.muted_subframes = lteu::all_uplink_mask(*tdd_config);
      }
      if (!mute.empty()) file.lte.tdd.muted_subframes = lteu::subframe_mask(mute);
      emit(lteu::render(lteu::quiet_period(file), format), out);
    } else if (*simulate) {
      const int n = stations.value_or(file.sweep.n_stations.front());
      const auto bytes = payload.value_or(file.sweep.payload_bytes.front());
      emit(lteu::render(lteu::simulate(file, n, bytes), format), out);
    } else if (*validate) {
      emit(lteu::render(lteu::validate(file)), out);
    }
  } catch (const lteu::ConfigError& e) {
    report_error("config", e.what(), e.where());
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    report_error("invalid_argument", e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    report_error("runtime", e.what());
    return kRuntimeError;
  }
  return kOk;
}
