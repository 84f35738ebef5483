#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lteu/backoff_analytics.hpp"
#include "lteu/lte_quiet.hpp"

namespace lteu {

enum class Alignment {
  /// LTE keeps its own timeline; Wi-Fi backoff freezes while LTE is on.
  free_running,
  /// Every tagged backoff starts at the beginning of a quiet interval.
  quiet_start_aligned,
};

enum class DecrementRule {
  /// Counters drop once per slot time, busy or idle (the slot-time
  /// abstraction the analytical model counts in).
  per_slot_time,
  /// Counters drop only on idle slots and stay frozen across transmissions.
  idle_only,
};

struct SimConfig {
  Scenario scenario;
  std::int64_t n_packets = 100000;
  std::uint64_t seed = 1;
  std::optional<DutyCycleSchedule> gating;
  Alignment alignment = Alignment::quiet_start_aligned;
  DecrementRule decrement = DecrementRule::per_slot_time;
  /// Slot times simulated before the tagged station starts recording.
  std::int64_t warmup_slots = 10000;

  void validate() const;
};

struct SimReport {
  /// Backoff delay of each delivered tagged packet, in delivery order.
  std::vector<double> delays;
  double mean_delay = 0.0;
  /// Delivered packets by number of collisions suffered, i = 0..R.
  std::vector<std::int64_t> collision_histogram;
  std::int64_t discarded = 0;
  /// Slot times the tagged station counted down through.
  std::int64_t slot_time_count = 0;
  double slot_time_mean = 0.0;
  double slot_time_variance = 0.0;
  /// Gated runs only: fraction of delivered packets whose exchange finished
  /// inside the quiet interval.
  std::optional<double> access_success_fraction;
  std::uint64_t seed = 0;
  std::int64_t n_packets = 0;
  std::string rng = "mt19937_64";
};

/// Slot-synchronous simulation of N saturated stations; station 0 is tagged.
/// Honours `cfg.gating` when present.  Deterministic for a given config.
[[nodiscard]] SimReport run(const SimConfig& cfg);

/// As run(), but requires a duty-cycle schedule.
///
/// quiet_start_aligned: a packet succeeds when its whole exchange ends before
/// the quiet interval that its backoff started with runs out.  Freezing
/// during LTE-on time does not move any station's state, so these trials are
/// drawn from the ungated delay process.
///
/// free_running: the channel is busy while LTE is on (counters freeze); a
/// packet succeeds when its final exchange ends before the quiet interval it
/// started in.
[[nodiscard]] SimReport gated_run(const SimConfig& cfg);

/// Uniform draw on {0, ..., bound - 1} by rejection, identical on every
/// standard library.
[[nodiscard]] std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// SplitMix64 of base and index; independent sub-seeds for sweep points.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// sup_x |F(x) - F_n(x)| for a continuous F, evaluated at every distinct
/// sample on both sides of the empirical jump.  `sorted` must be ascending.
template <class Cdf>
[[nodiscard]] double ks_distance(std::span<const double> sorted, Cdf&& cdf) {
  const auto n = static_cast<double>(sorted.size());
  double worst = 0.0;
  std::size_t k = 0;
  while (k < sorted.size()) {
    std::size_t end = k;
    while (end < sorted.size() && sorted[end] == sorted[k]) ++end;
    const double f = cdf(sorted[k]);
    const double below = static_cast<double>(k) / n;
    const double at = static_cast<double>(end) / n;
    worst = std::max({worst, std::abs(f - below), std::abs(f - at)});
    k = end;
  }
  return worst;
}

/// KS distance between the delays of `report` and the model's Pr{d < L}.
[[nodiscard]] double ks_distance(const SimReport& report, const BackoffAccessModel& model);

}  // namespace lteu
