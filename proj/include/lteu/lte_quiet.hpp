#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lteu {

enum class CyclicPrefix { normal, extended };

/// Downlink geometry that fixes which OFDM symbols always carry energy.
struct LteFrameConfig {
  CyclicPrefix cyclic_prefix = CyclicPrefix::normal;
  int symbols_per_slot = 7;
  double slot_duration_s = 0.5e-3;
  int pdcch_symbols = 3;
  /// Reference-signal symbols within each slot (antenna port 0).
  std::vector<int> crs_symbol_positions = {0, 4};

  void validate() const;
  [[nodiscard]] double symbol_duration_s() const {
    return slot_duration_s / symbols_per_slot;
  }
};

enum class SubframeKind : char { downlink = 'D', special = 'S', uplink = 'U' };

inline constexpr int kSubframesPerFrame = 10;
inline constexpr double kSubframeDuration = 1e-3;

using SubframePattern = std::array<SubframeKind, kSubframesPerFrame>;

/// The seven TD-LTE uplink/downlink configurations.
[[nodiscard]] const SubframePattern& tdd_pattern(int config_index);
[[nodiscard]] std::string to_string(const SubframePattern& pattern);

struct TddConfig {
  int config_index = 0;
  /// Bit k set: subframe k is muted (no LTE transmission).
  std::uint16_t muted_subframes = 0;

  [[nodiscard]] const SubframePattern& pattern() const { return tdd_pattern(config_index); }
  /// Throws std::invalid_argument for a bad index or a muted D/S subframe.
  void validate() const;
};

/// Mask with every uplink subframe of `config_index` muted.
[[nodiscard]] std::uint16_t all_uplink_mask(int config_index);
[[nodiscard]] std::uint16_t subframe_mask(std::span<const int> subframes);

/// Longest run of `true` when the sequence repeats end to start.
[[nodiscard]] int longest_cyclic_run(std::span<const bool> flags);

/// Longest stretch of symbols carrying neither PDCCH nor CRS, in seconds.
[[nodiscard]] double fdd_max_quiet(const LteFrameConfig& cfg);

/// Longest run of consecutive muted subframes, in seconds.
[[nodiscard]] double tdd_max_quiet(const TddConfig& cfg);

/// LTE-on for `period - quiet` subframes, then silent for `quiet`.
class DutyCycleSchedule {
 public:
  DutyCycleSchedule(int quiet_subframes, int period_subframes);

  [[nodiscard]] int quiet_subframes() const { return quiet_; }
  [[nodiscard]] int period_subframes() const { return period_; }
  [[nodiscard]] double period_s() const { return period_ * kSubframeDuration; }
  [[nodiscard]] double quiet_s() const { return quiet_ * kSubframeDuration; }
  [[nodiscard]] double busy_s() const { return (period_ - quiet_) * kSubframeDuration; }
  [[nodiscard]] double quiet_fraction() const {
    return static_cast<double>(quiet_) / period_;
  }
  [[nodiscard]] bool always_quiet() const { return quiet_ == period_; }
  [[nodiscard]] bool never_quiet() const { return quiet_ == 0; }

  [[nodiscard]] bool is_quiet(double t) const;
  /// Earliest time >= t at which the channel is free of LTE.  Throws
  /// std::logic_error when the schedule has no quiet interval.
  [[nodiscard]] double next_quiet_start(double t) const;
  /// End of the quiet interval containing t (t must be quiet).
  [[nodiscard]] double quiet_end(double t) const;

 private:
  int quiet_;
  int period_;
};

[[nodiscard]] DutyCycleSchedule duty_cycle_schedule(int quiet_subframes, int period_subframes);

}  // namespace lteu
