#include "lteu/dcf_timing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace lteu {

namespace {

// Guards ceil() against bits/bits_per_symbol landing a few ulps above an
// integer.
constexpr double kSymbolEpsilon = 1e-9;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void PhyProfile::validate() const {
  require(data_rate_bps > 0.0, fmt::format("profile '{}': data rate must be > 0", name));
  require(control_rate_bps > 0.0,
          fmt::format("profile '{}': control rate must be > 0", name));
  require(preamble_header_s >= 0.0,
          fmt::format("profile '{}': preamble must be >= 0", name));
  require(symbol_s > 0.0, fmt::format("profile '{}': symbol time must be > 0", name));
}

double DcfParameters::eifs_s() const {
  if (eifs_override_s > 0.0) return eifs_override_s;
  return sifs_s + airtime_at_rate(ack_bytes, phy.control_rate_bps, phy) + difs_s;
}

int DcfParameters::backoff_stages() const {
  return std::countr_zero(static_cast<unsigned>(cw_max / cw_min));
}

void DcfParameters::validate() const {
  require(slot_s > 0.0 && sifs_s > 0.0 && difs_s > 0.0, "DCF durations must be > 0");
  require(eifs_override_s >= 0.0, "EIFS override must be >= 0");
  require(cw_min >= 2, "cw_min must be >= 2");
  require(cw_max >= cw_min, "cw_max must be >= cw_min");
  require(cw_max % cw_min == 0 && std::has_single_bit(static_cast<unsigned>(cw_max / cw_min)),
          "cw_max / cw_min must be a power of two");
  require(retry_limit >= 0, "retry limit must be >= 0");
  require(ack_bytes > 0, "ack_bytes must be > 0");
  require(mac_overhead_bytes >= 0, "mac_overhead_bytes must be >= 0");
  phy.validate();
  require(eifs_s() >= difs_s, "EIFS must be >= DIFS");
}

double airtime_at_rate(std::int64_t bytes, double rate_bps, const PhyProfile& phy) {
  require(bytes >= 0, "byte count must be >= 0");
  require(rate_bps > 0.0 && phy.symbol_s > 0.0, "rate and symbol time must be > 0");
  const double bits = 8.0 * static_cast<double>(bytes);
  const double bits_per_symbol = rate_bps * phy.symbol_s;
  const double symbols = std::ceil(bits / bits_per_symbol - kSymbolEpsilon);
  return phy.preamble_header_s + std::max(0.0, symbols) * phy.symbol_s;
}

double frame_airtime(std::int64_t payload_bytes, const PhyProfile& phy,
                     std::int64_t overhead_bytes) {
  require(payload_bytes >= 0 && overhead_bytes >= 0, "frame sizes must be >= 0");
  return airtime_at_rate(payload_bytes + overhead_bytes, phy.data_rate_bps, phy);
}

ExchangeDurations exchange_durations(const DcfParameters& params,
                                     std::int64_t payload_bytes) {
  require(payload_bytes > 0, "payload must be > 0 bytes");
  params.validate();
  ExchangeDurations d;
  d.t_data = frame_airtime(payload_bytes, params.phy, params.mac_overhead_bytes);
  d.t_ack = airtime_at_rate(params.ack_bytes, params.phy.control_rate_bps, params.phy);
  d.t_success = d.t_data + params.sifs_s + d.t_ack + params.difs_s;
  d.t_collision = d.t_data + params.eifs_s();
  return d;
}

std::vector<PhyProfile> default_profiles() {
  std::vector<PhyProfile> out;
  // HT mixed-format preamble: 36 us with one spatial stream, 40 us with two.
  const double ht20[] = {6.5, 13.0, 19.5, 26.0, 39.0, 52.0, 58.5, 65.0};
  for (int mcs = 0; mcs < 8; ++mcs) {
    const double rate = ht20[mcs];
    // ACK goes out at the highest mandatory basic rate not above the data rate.
    const double basic = rate >= 24.0 ? 24.0 : (rate >= 12.0 ? 12.0 : 6.0);
    out.push_back({fmt::format("ht20-mcs{}", mcs), rate * 1e6, basic * 1e6, 36e-6, 4e-6});
  }
  out.push_back({"ht40-mcs15", 270e6, 24e6, 40e-6, 4e-6});
  out.push_back({"ofdm-6", 6e6, 6e6, 20e-6, 4e-6});
  out.push_back({"ofdm-24", 24e6, 24e6, 20e-6, 4e-6});
  out.push_back({"ofdm-54", 54e6, 24e6, 20e-6, 4e-6});
  out.push_back({std::string(kCalibrationProfile), 5.5e6, 1e6, 192e-6, 1e-6});
  return out;
}

DcfConfig default_dcf_config() {
  DcfConfig cfg;
  cfg.profiles = default_profiles();
  cfg.base.phy = cfg.profile(kCalibrationProfile);
  return cfg;
}

DcfParameters default_parameters() { return default_dcf_config().base; }

const PhyProfile& DcfConfig::profile(std::string_view name) const {
  for (const auto& p : profiles) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument(fmt::format("unknown PHY profile '{}'", name));
}

DcfParameters DcfConfig::with_profile(std::string_view name) const {
  DcfParameters p = base;
  p.phy = profile(name);
  return p;
}

}  // namespace lteu
