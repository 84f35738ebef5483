#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lteu/backoff_analytics.hpp"
#include "lteu/dcf_simulator.hpp"
#include "lteu/dcf_timing.hpp"
#include "lteu/lte_quiet.hpp"

namespace lteu {

/// A scenario file that failed to parse or validate.  `where()` is either
/// "line L, column C" for JSON syntax errors or the dotted field path.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string where, const std::string& message)
      : std::invalid_argument(where + ": " + message), where_(std::move(where)) {}

  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct SweepSpec {
  std::vector<int> n_stations = {2};
  std::vector<std::int64_t> payload_bytes = {1500};
  /// Quiet-period lengths in microseconds, strictly increasing.
  std::vector<double> quiet_grid_us = {3000.0};
};

struct SimulationSpec {
  std::int64_t n_packets = 100000;
  std::uint64_t seed = 1;
  Alignment alignment = Alignment::quiet_start_aligned;
  DecrementRule decrement = DecrementRule::per_slot_time;
  std::int64_t warmup_slots = 10000;
  std::optional<DutyCycleSchedule> gating;
};

enum class LteMode { fdd, tdd };

struct LteSpec {
  LteMode mode = LteMode::fdd;
  LteFrameConfig fdd;
  TddConfig tdd{0, all_uplink_mask(0)};
};

struct ScenarioFile {
  DcfConfig dcf = default_dcf_config();
  std::string phy_profile = std::string(kCalibrationProfile);
  ModelOptions model;
  SweepSpec sweep;
  SimulationSpec simulation;
  LteSpec lte;

  /// Timing block with the selected profile applied.
  [[nodiscard]] DcfParameters parameters() const { return dcf.with_profile(phy_profile); }
  [[nodiscard]] Scenario scenario(int n_stations, std::int64_t payload_bytes) const {
    return Scenario{n_stations, payload_bytes, parameters()};
  }
};

/// Parse a scenario document.  Absent blocks keep their defaults; unknown
/// keys are rejected.  Throws ConfigError.
[[nodiscard]] ScenarioFile parse_scenario(std::string_view json_text);
[[nodiscard]] ScenarioFile load_scenario(const std::filesystem::path& path);

/// Parse just the timing/profile block
/// ({slot_us, sifs_us, difs_us, cw_min, cw_max, retry_limit, ack_bytes,
/// mac_overhead_bytes, profiles[...]}).
[[nodiscard]] DcfConfig parse_dcf_config(std::string_view json_text);

enum class OutputFormat { csv, json };

struct AccessRow {
  int n_stations;
  std::int64_t payload_bytes;
  double quiet_us;
  double pr_access;
};

struct MeanDelayRow {
  int n_stations;
  std::int64_t payload_bytes;
  double mean_delay_us;
};

struct QuietPeriodResult {
  LteMode mode;
  double max_quiet_us;
};

/// Rows sorted by (N, payload, L); sweep points evaluate concurrently.
[[nodiscard]] std::vector<AccessRow> access_prob_rows(const ScenarioFile& file);
[[nodiscard]] std::vector<MeanDelayRow> mean_delay_rows(const ScenarioFile& file);
[[nodiscard]] QuietPeriodResult quiet_period(const ScenarioFile& file);

[[nodiscard]] std::string render(const std::vector<AccessRow>& rows, OutputFormat format);
[[nodiscard]] std::string render(const std::vector<MeanDelayRow>& rows, OutputFormat format);
[[nodiscard]] std::string render(const QuietPeriodResult& result, OutputFormat format);

/// One-point simulation.  CSV is the delay column; JSON is the summary
/// (mean_us, ks_vs_analytic, collision_hist, seed, n_packets, ...).
struct SimulationOutcome {
  SimReport report;
  double ks_vs_analytic;
  double analytic_mean_us;
};
[[nodiscard]] SimulationOutcome simulate(const ScenarioFile& file, int n_stations,
                                         std::int64_t payload_bytes);
[[nodiscard]] std::string render(const SimulationOutcome& outcome, OutputFormat format);

/// Analytic-vs-simulation harness over every (N, payload) sweep point.
inline constexpr double kValidateKsThreshold = 0.05;
inline constexpr double kValidateRelErrThreshold = 0.05;
inline constexpr std::int64_t kValidateMinPackets = 1000;

enum class ValidationStatus { pass, fail, insufficient_samples };

struct ValidationPoint {
  int n_stations;
  std::int64_t payload_bytes;
  std::uint64_t seed;
  double ks_distance;
  double analytic_mean_us;
  double sim_mean_us;
  double rel_err;
  ValidationStatus status;
};

struct ValidationSummary {
  std::vector<ValidationPoint> points;
  ValidationStatus overall;
  std::uint64_t seed;
  std::int64_t n_packets;
};

[[nodiscard]] ValidationSummary validate(const ScenarioFile& file);
/// Always JSON.
[[nodiscard]] std::string render(const ValidationSummary& summary);

[[nodiscard]] std::string_view to_string(ValidationStatus status);
[[nodiscard]] std::string_view to_string(LteMode mode);

}  // namespace lteu
