#include "lteu/lte_quiet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace lteu {

namespace {

constexpr SubframeKind D = SubframeKind::downlink;
constexpr SubframeKind S = SubframeKind::special;
constexpr SubframeKind U = SubframeKind::uplink;

// 3GPP TS 36.211 Table 4.2-2.
constexpr std::array<SubframePattern, 7> kTddPatterns = {{
    {D, S, U, U, U, D, S, U, U, U},
    {D, S, U, U, D, D, S, U, U, D},
    {D, S, U, D, D, D, S, U, D, D},
    {D, S, U, U, U, D, D, D, D, D},
    {D, S, U, U, D, D, D, D, D, D},
    {D, S, U, D, D, D, D, D, D, D},
    {D, S, U, U, U, D, S, U, U, D},
}};

bool muted(std::uint16_t mask, int subframe) { return (mask >> subframe) & 1U; }

}  // namespace

void LteFrameConfig::validate() const {
  if (cyclic_prefix != CyclicPrefix::normal) {
    throw std::invalid_argument("only the normal cyclic prefix is supported");
  }
  if (symbols_per_slot != 7) {
    throw std::invalid_argument("normal cyclic prefix has 7 symbols per slot");
  }
  if (slot_duration_s <= 0.0) throw std::invalid_argument("slot duration must be > 0");
  if (pdcch_symbols < 1 || pdcch_symbols > 3) {
    throw std::invalid_argument(
        fmt::format("PDCCH spans 1 to 3 symbols, got {}", pdcch_symbols));
  }
  for (int pos : crs_symbol_positions) {
    if (pos < 0 || pos >= symbols_per_slot) {
      throw std::invalid_argument(fmt::format("CRS symbol {} outside the slot", pos));
    }
  }
}

const SubframePattern& tdd_pattern(int config_index) {
  if (config_index < 0 || config_index >= static_cast<int>(kTddPatterns.size())) {
    throw std::invalid_argument(
        fmt::format("TDD UL/DL configuration {} outside 0..6", config_index));
  }
  return kTddPatterns[config_index];
}

std::string to_string(const SubframePattern& pattern) {
  std::string out;
  for (auto kind : pattern) out.push_back(static_cast<char>(kind));
  return out;
}

void TddConfig::validate() const {
  const auto& p = tdd_pattern(config_index);
  if (muted_subframes >> kSubframesPerFrame) {
    throw std::invalid_argument("muting mask has bits beyond subframe 9");
  }
  for (int k = 0; k < kSubframesPerFrame; ++k) {
    if (muted(muted_subframes, k) && p[k] != SubframeKind::uplink) {
      throw std::invalid_argument(fmt::format(
          "subframe {} of configuration {} is '{}'; only uplink subframes can be muted", k,
          config_index, static_cast<char>(p[k])));
    }
  }
}

std::uint16_t all_uplink_mask(int config_index) {
  const auto& p = tdd_pattern(config_index);
  std::uint16_t mask = 0;
  for (int k = 0; k < kSubframesPerFrame; ++k) {
    if (p[k] == SubframeKind::uplink) mask |= static_cast<std::uint16_t>(1U << k);
  }
  return mask;
}

std::uint16_t subframe_mask(std::span<const int> subframes) {
  std::uint16_t mask = 0;
  for (int k : subframes) {
    if (k < 0 || k >= kSubframesPerFrame) {
      throw std::invalid_argument(fmt::format("subframe {} outside 0..9", k));
    }
    mask |= static_cast<std::uint16_t>(1U << k);
  }
  return mask;
}

int longest_cyclic_run(std::span<const bool> flags) {
  const auto n = flags.size();
  if (n == 0) return 0;
  bool all = true;
  for (bool f : flags) all = all && f;
  if (all) return static_cast<int>(n);
  // Walking the sequence twice covers runs that wrap around.
  int best = 0;
  int run = 0;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    run = flags[k % n] ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

double fdd_max_quiet(const LteFrameConfig& cfg) {
  cfg.validate();
  // validate() pins the slot at 7 symbols.
  std::array<bool, 14> free{};
  free.fill(true);
  for (int k = 0; k < cfg.pdcch_symbols; ++k) free[k] = false;
  for (int slot = 0; slot < 2; ++slot) {
    for (int pos : cfg.crs_symbol_positions) free[slot * cfg.symbols_per_slot + pos] = false;
  }
  const int run = longest_cyclic_run(free);
  return run * cfg.symbol_duration_s();
}

double tdd_max_quiet(const TddConfig& cfg) {
  cfg.validate();
  std::array<bool, kSubframesPerFrame> flags{};
  for (int k = 0; k < kSubframesPerFrame; ++k) flags[k] = muted(cfg.muted_subframes, k);
  return longest_cyclic_run(flags) * kSubframeDuration;
}

DutyCycleSchedule::DutyCycleSchedule(int quiet_subframes, int period_subframes)
    : quiet_(quiet_subframes), period_(period_subframes) {
  if (period_ < 1) throw std::invalid_argument("duty cycle period must be >= 1 subframe");
  if (quiet_ < 0 || quiet_ > period_) {
    throw std::invalid_argument(
        fmt::format("quiet length {} must lie in 0..{}", quiet_, period_));
  }
}

bool DutyCycleSchedule::is_quiet(double t) const {
  if (always_quiet()) return true;
  if (never_quiet()) return false;
  const double phase = t - std::floor(t / period_s()) * period_s();
  return phase >= busy_s();
}

double DutyCycleSchedule::next_quiet_start(double t) const {
  if (never_quiet()) throw std::logic_error("schedule has no quiet interval");
  if (is_quiet(t)) return t;
  const double start = std::floor(t / period_s()) * period_s();
  return start + busy_s();
}

double DutyCycleSchedule::quiet_end(double t) const {
  if (always_quiet()) return std::numeric_limits<double>::infinity();
  const double start = std::floor(t / period_s()) * period_s();
  return start + period_s();
}

DutyCycleSchedule duty_cycle_schedule(int quiet_subframes, int period_subframes) {
  return DutyCycleSchedule(quiet_subframes, period_subframes);
}

}  // namespace lteu
