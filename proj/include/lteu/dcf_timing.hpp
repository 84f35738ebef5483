#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lteu {

// All durations are SI seconds, all rates bits per second.

/// One modulation/coding choice: the rate data frames are sent at, the rate
/// the ACK goes out at, and the PHY framing needed to turn bits into airtime.
struct PhyProfile {
  std::string name;
  double data_rate_bps = 0.0;
  double control_rate_bps = 0.0;
  double preamble_header_s = 0.0;
  /// Granularity the payload is rounded up to (one OFDM symbol, or one
  /// microsecond for DSSS/CCK framing).
  double symbol_s = 0.0;

  /// Throws std::invalid_argument when a rate or duration is out of range.
  void validate() const;
};

/// 802.11 DCF timing and contention constants.
///
/// `cw_min` and `cw_max` are window sizes: a backoff at stage k is drawn
/// uniformly from {0, ..., CW_k - 1}.  EIFS defaults to SIFS + ACK airtime at
/// the profile's control rate + DIFS; set `eifs_override_s` to pin it.
struct DcfParameters {
  double slot_s = 9e-6;
  double sifs_s = 16e-6;
  double difs_s = 34e-6;
  double eifs_override_s = 0.0;
  int cw_min = 16;
  int cw_max = 1024;
  int retry_limit = 7;
  std::int64_t ack_bytes = 14;
  std::int64_t mac_overhead_bytes = 36;
  PhyProfile phy;

  [[nodiscard]] double eifs_s() const;
  /// log2(cw_max / cw_min), the number of doubling stages.
  [[nodiscard]] int backoff_stages() const;

  void validate() const;
};

struct ExchangeDurations {
  double t_data = 0.0;
  double t_ack = 0.0;
  double t_success = 0.0;
  double t_collision = 0.0;
};

/// Airtime of `bytes` sent at `rate_bps` with the framing of `phy`.
[[nodiscard]] double airtime_at_rate(std::int64_t bytes, double rate_bps,
                                     const PhyProfile& phy);

/// preamble + ceil(bits / bits_per_symbol) * symbol, at the data rate.
[[nodiscard]] double frame_airtime(std::int64_t payload_bytes,
                                   const PhyProfile& phy,
                                   std::int64_t overhead_bytes);

/// T_s = data + SIFS + ACK + DIFS, T_c = data + EIFS.
[[nodiscard]] ExchangeDurations exchange_durations(const DcfParameters& params,
                                                   std::int64_t payload_bytes);

/// 802.11n 20 MHz single-stream MCS 0-7, a two-stream 40 MHz HT rate,
/// legacy OFDM 6/24/54 Mb/s and the long-preamble CCK profile used as the
/// default calibration.
[[nodiscard]] std::vector<PhyProfile> default_profiles();

/// Name of the profile `default_parameters()` selects.
inline constexpr std::string_view kCalibrationProfile = "dsss-5.5-long";

/// 5 GHz OFDM timing (9/16/34 us), CW 16..1024, R = 7, calibration profile.
[[nodiscard]] DcfParameters default_parameters();

/// Timing block plus the set of PHY profiles it was loaded with.
struct DcfConfig {
  DcfParameters base;
  std::vector<PhyProfile> profiles;

  /// Throws std::invalid_argument for unknown names.
  [[nodiscard]] const PhyProfile& profile(std::string_view name) const;
  [[nodiscard]] DcfParameters with_profile(std::string_view name) const;
};

[[nodiscard]] DcfConfig default_dcf_config();

}  // namespace lteu
