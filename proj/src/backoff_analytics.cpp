#include "lteu/backoff_analytics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace lteu {

namespace {

constexpr double kTauTolerance = 1e-10;
constexpr double kDamping = 0.5;
constexpr double kTauStart = 0.1;
constexpr int kMaxIterations = 10000;

// Beyond this many standard deviations a component contributes 0 or its full
// weight (tail mass < 1e-18).
constexpr double kTailSigmas = 9.0;

double collision_probability(double tau, int n_stations) {
  return 1.0 - std::pow(1.0 - tau, n_stations - 1);
}

double fixed_point_map(double tau, int n_stations, int cw_min, int stages) {
  return transmission_probability(collision_probability(tau, n_stations), cw_min, stages);
}

double gaussian_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// Phi on [-kTailSigmas, kTailSigmas] as piecewise quintic Hermite polynomials
// (value, first and second derivative matched at the nodes).  Absolute error
// is below 1e-15, and evaluation is a handful of FMAs instead of erfc; the
// integration grid evaluates Phi hundreds of millions of times per model.
class GaussianCdfTable {
 public:
  static constexpr int kNodesPerUnit = 64;

  GaussianCdfTable() {
    const int intervals = static_cast<int>(2 * kTailSigmas * kNodesPerUnit);
    coeffs_.resize(static_cast<std::size_t>(intervals) * 6);
    const double dz = 1.0 / kNodesPerUnit;
    auto pdf = [](double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); };
    for (int k = 0; k < intervals; ++k) {
      const double z0 = -kTailSigmas + k * dz;
      const double z1 = z0 + dz;
      const double f0 = gaussian_cdf(z0), f1 = gaussian_cdf(z1);
      const double d0 = pdf(z0) * dz, d1 = pdf(z1) * dz;
      const double s0 = -z0 * pdf(z0) * dz * dz, s1 = -z1 * pdf(z1) * dz * dz;
      const double df = f1 - f0;
      double* c = &coeffs_[static_cast<std::size_t>(k) * 6];
      c[0] = f0;
      c[1] = d0;
      c[2] = 0.5 * s0;
      c[3] = 10.0 * df - 6.0 * d0 - 4.0 * d1 - 0.5 * (3.0 * s0 - s1);
      c[4] = -15.0 * df + 8.0 * d0 + 7.0 * d1 + 0.5 * (3.0 * s0 - 2.0 * s1);
      c[5] = 6.0 * df - 3.0 * (d0 + d1) - 0.5 * (s0 - s1);
    }
    last_ = intervals - 1;
  }

  // z must lie in [-kTailSigmas, kTailSigmas].
  [[nodiscard]] double operator()(double z) const {
    const double u = (z + kTailSigmas) * kNodesPerUnit;
    const int k = std::min(static_cast<int>(u), last_);
    const double t = u - k;
    const double* c = &coeffs_[static_cast<std::size_t>(k) * 6];
    return c[0] + t * (c[1] + t * (c[2] + t * (c[3] + t * (c[4] + t * c[5]))));
  }

 private:
  std::vector<double> coeffs_;
  int last_ = 0;
};

const GaussianCdfTable& cdf_table() {
  static const GaussianCdfTable table;
  return table;
}

// Half-width (in standard deviations) past which a component of weight w
// changes the CDF by less than 1e-20.
double tail_cutoff(double weight) {
  const double ratio = weight / 1e-20;
  return ratio > 1.0 ? std::min(kTailSigmas, std::sqrt(2.0 * std::log(ratio))) : 0.0;
}

constexpr double kWideSigmaSteps = 8.0;

double gaussian_pdf(double z) {
  constexpr double kInvSqrt2Pi = 0.39894228040143267794;
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

// d/dz of z (1 - Phi(z)) - phi(z) is 1 - Phi(z).
double survival_antiderivative(double z) {
  return z * 0.5 * std::erfc(z / std::numbers::sqrt2) - gaussian_pdf(z);
}

// Mixture CDF (unscaled) on the grid L_k = k * step, k < count.  Zero-variance
// terms are skipped when `skip_steps` is set.  `phi` evaluates the standard
// normal CDF inside each term's band.
template <class Phi>
std::vector<double> accumulate_grid(const std::vector<detail::MixtureTerm>& terms, double step,
                                    std::size_t count, bool skip_steps, Phi&& phi) {
  std::vector<double> partial(count, 0.0);
  // full[k] receives a term's whole weight from the first index past its band.
  std::vector<double> full(count + 1, 0.0);
  const auto n = static_cast<std::ptrdiff_t>(count);

  for (const auto& t : terms) {
    if (t.stddev <= 0.0) {
      if (skip_steps) continue;
      auto k = static_cast<std::ptrdiff_t>(std::ceil(t.mean / step));
      while (k > 0 && static_cast<double>(k - 1) * step >= t.mean) --k;
      while (static_cast<double>(k) * step < t.mean) ++k;
      full[std::clamp<std::ptrdiff_t>(k, 0, n)] += t.weight;
      continue;
    }
    const double half = tail_cutoff(t.weight);
    const double lo = t.mean - half * t.stddev;
    const double hi = t.mean + half * t.stddev;
    const auto k_lo = std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(std::ceil(lo / step)));
    const auto k_hi = static_cast<std::ptrdiff_t>(std::floor(hi / step));
    const double inv = 1.0 / t.stddev;
    const auto k_end = std::min(k_hi, n - 1);
    for (auto k = k_lo; k <= k_end; ++k) {
      const double z = std::clamp((static_cast<double>(k) * step - t.mean) * inv, -half, half);
      partial[k] += t.weight * phi(z);
    }
    full[std::clamp<std::ptrdiff_t>(k_hi + 1, 0, n)] += t.weight;
  }

  double running = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    running += full[k];
    partial[k] += running;
  }
  return partial;
}

}  // namespace

void Scenario::validate() const {
  if (n_stations < 1) throw std::invalid_argument("scenario needs at least one station");
  if (payload_bytes <= 0) throw std::invalid_argument("payload must be > 0 bytes");
  params.validate();
}

double transmission_probability(double p, int cw_min, int stages) {
  // (1 - (2p)^m) / (1 - 2p) written as sum_{k<m} (2p)^k.
  double geometric = 0.0;
  double term = 1.0;
  for (int k = 0; k < stages; ++k) {
    geometric += term;
    term *= 2.0 * p;
  }
  const double w = cw_min;
  return 2.0 / ((w + 1.0) + p * w * geometric);
}

double tau_residual(double tau, int n_stations, int cw_min, int cw_max) {
  const int stages = std::countr_zero(static_cast<unsigned>(cw_max / cw_min));
  return std::abs(tau - fixed_point_map(tau, n_stations, cw_min, stages));
}

double solve_tau(int n_stations, int cw_min, int cw_max) {
  if (n_stations < 1) throw std::invalid_argument("solve_tau: N must be >= 1");
  if (cw_min < 1 || cw_max < cw_min) throw std::invalid_argument("solve_tau: bad windows");
  const int stages = std::countr_zero(static_cast<unsigned>(cw_max / cw_min));
  auto f = [&](double t) { return fixed_point_map(t, n_stations, cw_min, stages); };

  double tau = kTauStart;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double next = (1.0 - kDamping) * tau + kDamping * f(tau);
    if (std::abs(next - tau) < 1e-15) {
      tau = next;
      break;
    }
    tau = next;
  }
  if (tau > 0.0 && tau < 1.0 && std::abs(tau - f(tau)) < kTauTolerance) return tau;

  // g(t) = t - f(t) is negative near 0 and positive at 1.
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid - f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  tau = 0.5 * (lo + hi);
  if (std::abs(tau - f(tau)) >= kTauTolerance) {
    throw ConvergenceError(fmt::format(
        "tau fixed point did not converge for N={}, CW={}..{}", n_stations, cw_min, cw_max));
  }
  return tau;
}

int contention_window(int k, const DcfParameters& params) {
  if (k < 0) throw std::invalid_argument("contention_window: stage must be >= 0");
  if (k >= params.backoff_stages()) return params.cw_max;
  return std::min(params.cw_min << k, params.cw_max);
}

int slot_support_max(int i, const DcfParameters& params) {
  int total = 0;
  for (int k = 0; k <= i; ++k) total += contention_window(k, params) - 1;
  return total;
}

SlotCountPmf slots_given_collisions(int i, const DcfParameters& params) {
  if (i < 0 || i > params.retry_limit) {
    throw std::out_of_range(
        fmt::format("collision count {} outside 0..{}", i, params.retry_limit));
  }
  SlotCountPmf pmf;
  pmf.collisions = i;
  pmf.probs = {1.0};
  for (int k = 0; k <= i; ++k) {
    const int cw = contention_window(k, params);
    const double share = 1.0 / cw;
    std::vector<double> next(pmf.probs.size() + cw - 1, 0.0);
    // Sliding box sum: next[j] = share * sum_{t = j-cw+1}^{j} probs[t].
    double window = 0.0;
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (j < pmf.probs.size()) window += pmf.probs[j];
      if (j >= static_cast<std::size_t>(cw)) window -= pmf.probs[j - cw];
      next[j] = share * window;
    }
    pmf.probs = std::move(next);
  }
  return pmf;
}

CollisionDistribution collision_distribution(const Scenario& scenario) {
  scenario.validate();
  const auto& params = scenario.params;
  CollisionDistribution dist;
  dist.tau = solve_tau(scenario.n_stations, params.cw_min, params.cw_max);
  dist.p_success = std::pow(1.0 - dist.tau, scenario.n_stations - 1);
  dist.p_collision = 1.0 - dist.p_success;
  dist.probs.resize(params.retry_limit + 1);
  double pc_power = 1.0;
  for (int i = 0; i <= params.retry_limit; ++i) {
    dist.probs[i] = pc_power * dist.p_success;
    pc_power *= dist.p_collision;
  }
  dist.discard_mass = pc_power;
  return dist;
}

SlotTimeMoments slot_time_moments(const Scenario& scenario, const ExchangeDurations& exchanges) {
  scenario.validate();
  const auto& params = scenario.params;
  const int others = scenario.n_stations - 1;
  const double tau = solve_tau(scenario.n_stations, params.cw_min, params.cw_max);

  SlotTimeMoments m;
  m.p_empty = std::pow(1.0 - tau, others);
  m.p_other_success = others > 0 ? others * tau * std::pow(1.0 - tau, others - 1) : 0.0;
  m.p_other_collision = std::max(0.0, 1.0 - m.p_empty - m.p_other_success);

  const double values[] = {params.slot_s, exchanges.t_success, exchanges.t_collision};
  const double probs[] = {m.p_empty, m.p_other_success, m.p_other_collision};
  for (int k = 0; k < 3; ++k) m.mean += probs[k] * values[k];
  for (int k = 0; k < 3; ++k) m.variance += probs[k] * (values[k] - m.mean) * (values[k] - m.mean);
  return m;
}

ConditionalGaussian conditional_gaussian(int i, int j, const SlotTimeMoments& moments,
                                         const ExchangeDurations& exchanges) {
  ConditionalGaussian g;
  g.mean = j * moments.mean + i * exchanges.t_collision + exchanges.t_success;
  g.stddev = std::sqrt(j * moments.variance);
  return g;
}

double conditional_access_prob(double quiet_s, const ConditionalGaussian& g) {
  if (g.stddev <= 0.0) return quiet_s >= g.mean ? 1.0 : 0.0;
  return gaussian_cdf((quiet_s - g.mean) / g.stddev);
}

BackoffAccessModel::BackoffAccessModel(Scenario scenario, ModelOptions options)
    : scenario_(std::move(scenario)), options_(options) {
  scenario_.validate();
  exchanges_ = exchange_durations(scenario_.params, scenario_.payload_bytes);
  collisions_ = collision_distribution(scenario_);
  moments_ = slot_time_moments(scenario_, exchanges_);

  const int retries = scenario_.params.retry_limit;
  slot_pmfs_.reserve(retries + 1);
  for (int i = 0; i <= retries; ++i) {
    slot_pmfs_.push_back(slots_given_collisions(i, scenario_.params));
    if (collisions_.probs[i] == 0.0) continue;
    const auto& probs = slot_pmfs_.back().probs;
    for (int j = 0; j < static_cast<int>(probs.size()); ++j) {
      const double weight = collisions_.probs[i] * probs[j];
      if (weight == 0.0) continue;
      const auto g = component(i, j);
      terms_.push_back({weight, g.mean, g.stddev});
    }
  }
}

ConditionalGaussian BackoffAccessModel::component(int i, int j) const {
  auto g = conditional_gaussian(i, j, moments_, exchanges_);
  if (options_.count_initial_difs) g.mean += scenario_.params.difs_s;
  return g;
}

double BackoffAccessModel::scale() const {
  return options_.normalize_on_success ? 1.0 / delivered_mass() : 1.0;
}

double BackoffAccessModel::access_probability(double quiet_s) const {
  if (quiet_s < 0.0) throw std::invalid_argument("access_probability: L must be >= 0");
  double sum = 0.0;
  for (const auto& t : terms_) {
    if (t.stddev <= 0.0) {
      if (quiet_s >= t.mean) sum += t.weight;
      continue;
    }
    const double z = (quiet_s - t.mean) / t.stddev;
    if (z >= kTailSigmas) {
      sum += t.weight;
    } else if (z > -kTailSigmas) {
      sum += t.weight * gaussian_cdf(z);
    }
  }
  return std::min(1.0, sum * scale());
}

std::vector<double> BackoffAccessModel::cdf_grid(double step_s, std::size_t count) const {
  if (step_s <= 0.0) throw std::invalid_argument("cdf_grid: step must be > 0");
  auto cdf = accumulate_grid(terms_, step_s, count, false, gaussian_cdf);
  const double s = scale();
  for (auto& v : cdf) v = std::min(1.0, v * s);
  return cdf;
}

double BackoffAccessModel::integration_horizon() const {
  double max_mean = 0.0;
  double max_sd = 0.0;
  for (const auto& t : terms_) {
    max_mean = std::max(max_mean, t.mean);
    max_sd = std::max(max_sd, t.stddev);
  }
  return max_mean + 8.0 * max_sd;
}

double BackoffAccessModel::mean_backoff_delay() const {
  if (!options_.normalize_on_success) {
    throw std::logic_error(
        "mean_backoff_delay: the unnormalised CDF never reaches one; enable "
        "normalize_on_success");
  }
  const double horizon = integration_horizon();
  const auto intervals =
      static_cast<std::size_t>(std::ceil(horizon / kIntegrationStep - 1e-9));
  if (intervals == 0) return 0.0;
  const double h = horizon / static_cast<double>(intervals);

  // Zero-variance components are unit steps in the survival function.  The
  // trapezoidal rule is exact on each constant piece once the grid is split
  // at the step, which leaves weight * m for each of them.
  //
  // Components much wider than the step are summed in closed form: the
  // trapezoid sum of a Gaussian survival function equals its integral plus
  // the h^2/12 endpoint term.  The h^4 term and the aliasing error, of order
  // exp(-2 pi^2 (sigma/h)^2), are far below double precision once
  // sigma >= kWideSigmaSteps * h.  The rest go through the grid.
  double step_area = 0.0;
  double wide_area = 0.0;
  double total_weight = 0.0;
  std::vector<detail::MixtureTerm> narrow;
  const double wide_sigma = kWideSigmaSteps * h;
  for (const auto& t : terms_) {
    total_weight += t.weight;
    if (t.stddev <= 0.0) {
      step_area += t.weight * t.mean;
    } else if (t.stddev >= wide_sigma) {
      const double za = (0.0 - t.mean) / t.stddev;
      const double zb = (horizon - t.mean) / t.stddev;
      const double integral =
          t.stddev * (survival_antiderivative(zb) - survival_antiderivative(za));
      // f'(L) = -phi(z) / sigma for f = 1 - Phi.
      const double endpoint = h * h / 12.0 * (gaussian_pdf(za) - gaussian_pdf(zb)) / t.stddev;
      wide_area += t.weight * (integral + endpoint);
    } else {
      narrow.push_back(t);
    }
  }
  double narrow_weight = 0.0;
  for (const auto& t : narrow) narrow_weight += t.weight;

  const auto& table = cdf_table();
  const auto cdf = accumulate_grid(narrow, h, intervals + 1, true,
                                   [&](double z) { return table(z); });

  // Trapezoid over sum_t w_t (1 - Phi_t(L)) for the narrow terms.
  double area = 0.5 * ((narrow_weight - cdf.front()) + (narrow_weight - cdf.back()));
  for (std::size_t k = 1; k < intervals; ++k) area += narrow_weight - cdf[k];
  area = area * h + wide_area;

  const double s = scale();
  // Any rounding gap between the summed weights and 1 - P_c^(R+1).
  const double residual = horizon * (1.0 - total_weight * s);
  return (area + step_area) * s + residual;
}

double BackoffAccessModel::weighted_mean_delay() const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.weight * t.mean;
  return sum / delivered_mass();
}

}  // namespace lteu
