#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lteu/dcf_timing.hpp"

namespace lteu {

namespace detail {
/// One (i, j) component of the delay mixture.
struct MixtureTerm {
  double weight;
  double mean;
  double stddev;
};
}  // namespace detail

/// N saturated stations sending `payload_bytes` frames under `params`.
struct Scenario {
  int n_stations = 1;
  std::int64_t payload_bytes = 1500;
  DcfParameters params;

  void validate() const;
};

/// Raised when the transmission-probability fixed point cannot be located.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bianchi's per-slot transmission probability of a station whose
/// transmissions collide with probability `p`, for minimum window `cw_min`
/// and `stages` doublings.  Uses the expanded geometric sum so p = 1/2 is
/// not a removable singularity.
[[nodiscard]] double transmission_probability(double p, int cw_min, int stages);

/// |tau - f(1 - (1 - tau)^(N-1))|.
[[nodiscard]] double tau_residual(double tau, int n_stations, int cw_min, int cw_max);

/// Fixed point tau of p = 1 - (1 - tau)^(N-1), tau = f(p).
///
/// Damped iteration (alpha = 0.5, start 0.1, at most 10^4 steps) with a
/// bisection fallback.  Throws std::invalid_argument for N < 1 and
/// ConvergenceError if neither route reaches a residual below 1e-10.
[[nodiscard]] double solve_tau(int n_stations, int cw_min, int cw_max);

/// CW_k = min(2^k CW_min, CW_max).
[[nodiscard]] int contention_window(int k, const DcfParameters& params);

/// W_i = sum_{k <= i} (CW_k - 1), the largest slot count after i collisions.
[[nodiscard]] int slot_support_max(int i, const DcfParameters& params);

/// Distribution of the number of slot times counted down before the
/// (i+1)-th attempt, i.e. of sum_{k=0}^{i} unif{0, CW_k - 1}.
struct SlotCountPmf {
  int collisions = 0;
  std::vector<double> probs;

  [[nodiscard]] int support_max() const { return static_cast<int>(probs.size()) - 1; }
};

/// Iterated discrete convolution of the stage windows.  Throws
/// std::out_of_range unless 0 <= i <= retry_limit.
[[nodiscard]] SlotCountPmf slots_given_collisions(int i, const DcfParameters& params);

struct CollisionDistribution {
  /// probs[i] = P_c^i P_s for i = 0..R.
  std::vector<double> probs;
  double tau = 0.0;
  double p_success = 0.0;
  double p_collision = 0.0;
  /// P_c^(R+1): packets dropped after the retry limit.
  double discard_mass = 0.0;
};

[[nodiscard]] CollisionDistribution collision_distribution(const Scenario& scenario);

/// Moments of one slot time seen by a station that is counting down: empty
/// (slot), another station's success (T_s) or a collision among the others
/// (T_c).
struct SlotTimeMoments {
  double mean = 0.0;
  double variance = 0.0;
  double p_empty = 1.0;
  double p_other_success = 0.0;
  double p_other_collision = 0.0;
};

[[nodiscard]] SlotTimeMoments slot_time_moments(const Scenario& scenario,
                                                const ExchangeDurations& exchanges);

struct ConditionalGaussian {
  double mean = 0.0;
  double stddev = 0.0;
};

/// Delay given i collisions and j slot times: j slot times, i collision
/// exchanges and the final successful exchange.
[[nodiscard]] ConditionalGaussian conditional_gaussian(int i, int j,
                                                       const SlotTimeMoments& moments,
                                                       const ExchangeDurations& exchanges);

/// Phi((L - m) / sigma); a unit step at m when sigma is zero.
[[nodiscard]] double conditional_access_prob(double quiet_s, const ConditionalGaussian& g);

struct ModelOptions {
  /// Condition on eventual success, so the CDF tends to one.
  bool normalize_on_success = true;
  /// Add the DIFS sensed before the first backoff to every delay.
  bool count_initial_difs = false;
};

/// The assembled analytical model for one scenario.  Immutable once built;
/// evaluation is const and safe to share across threads.
class BackoffAccessModel {
 public:
  explicit BackoffAccessModel(Scenario scenario, ModelOptions options = {});

  [[nodiscard]] const Scenario& scenario() const { return scenario_; }
  [[nodiscard]] const ModelOptions& options() const { return options_; }
  [[nodiscard]] const CollisionDistribution& collisions() const { return collisions_; }
  [[nodiscard]] const std::vector<SlotCountPmf>& slot_pmfs() const { return slot_pmfs_; }
  [[nodiscard]] const SlotTimeMoments& moments() const { return moments_; }
  [[nodiscard]] const ExchangeDurations& exchanges() const { return exchanges_; }

  /// m_ij and sigma_ij, including the optional initial DIFS.
  [[nodiscard]] ConditionalGaussian component(int i, int j) const;

  /// Pr{d < L}.  Non-decreasing in L.
  [[nodiscard]] double access_probability(double quiet_s) const;

  /// Pr{d < k * step} for k = 0 .. count - 1.
  [[nodiscard]] std::vector<double> cdf_grid(double step_s, std::size_t count) const;

  /// E{d} as the integral of 1 - Pr{d < L} over [0, L_max] by the
  /// trapezoidal rule (step <= 5 us).  Requires normalize_on_success.
  [[nodiscard]] double mean_backoff_delay() const;

  /// sum_{i,j} m_ij Pr{i, j} / (1 - P_c^(R+1)).
  [[nodiscard]] double weighted_mean_delay() const;

  /// max m_ij + 8 max sigma_ij over components with non-zero weight.
  [[nodiscard]] double integration_horizon() const;

  /// Weight carried by the mixture before normalisation (1 - P_c^(R+1)).
  [[nodiscard]] double delivered_mass() const { return 1.0 - collisions_.discard_mass; }

  static constexpr double kIntegrationStep = 5e-6;

 private:
  [[nodiscard]] double scale() const;

  Scenario scenario_;
  ModelOptions options_;
  ExchangeDurations exchanges_;
  CollisionDistribution collisions_;
  std::vector<SlotCountPmf> slot_pmfs_;
  SlotTimeMoments moments_;
  std::vector<detail::MixtureTerm> terms_;
};

}  // namespace lteu
