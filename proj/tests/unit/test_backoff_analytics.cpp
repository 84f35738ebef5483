#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lteu/backoff_analytics.hpp"

using namespace lteu;

namespace {

// Bianchi's closed form as printed, bisected on g(tau) = tau - f(p(tau)).
// Independent of the library's rearranged sum and damped iteration.
double bisect_tau(int n, int w, int m) {
  auto f = [&](double tau) {
    const double p = 1.0 - std::pow(1.0 - tau, n - 1);
    const double q = 1.0 - 2.0 * p;
    return 2.0 * q / (q * (w + 1) + p * w * (1.0 - std::pow(2.0 * p, m)));
  };
  double lo = 1e-12;
  double hi = 0.999;  // keeps midpoints off tau = 1/2, where the form is 0/0 at N = 2
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (mid - f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Counts of each total over every stage draw; exact integers.
std::vector<std::uint64_t> enumerate_counts(const std::vector<int>& windows) {
  std::vector<std::uint64_t> counts(1, 1);
  for (int cw : windows) {
    std::vector<std::uint64_t> next(counts.size() + cw - 1, 0);
    for (std::size_t s = 0; s < counts.size(); ++s) {
      for (int b = 0; b < cw; ++b) next[s + b] += counts[s];
    }
    counts = std::move(next);
  }
  return counts;
}

Scenario scenario(int n, std::int64_t payload) { return {n, payload, default_parameters()}; }

}  // namespace

TEST_CASE("tau for a lone station") {
  CHECK(solve_tau(1, 16, 1024) == doctest::Approx(2.0 / 17.0).epsilon(1e-12));
  CHECK(transmission_probability(0.0, 16, 6) == doctest::Approx(2.0 / 17.0).epsilon(1e-15));
}

TEST_CASE("tau against an independent bisection") {
  for (int n : {2, 3, 5, 10, 20}) {
    CAPTURE(n);
    const double tau = solve_tau(n, 16, 1024);
    CHECK(tau == doctest::Approx(bisect_tau(n, 16, 6)).epsilon(1e-9));
  }
  // Regression constant for two stations.
  CHECK(solve_tau(2, 16, 1024) == doctest::Approx(0.104620632282).epsilon(1e-10));
}

TEST_CASE("tau residual stays tiny up to fifty stations") {
  for (int n = 1; n <= 50; ++n) {
    for (auto [lo, hi] : {std::pair{16, 1024}, std::pair{32, 1024}, std::pair{8, 8}, std::pair{2, 2048}}) {
      const double tau = solve_tau(n, lo, hi);
      CHECK(tau_residual(tau, n, lo, hi) < 1e-10);
      CHECK(tau > 0.0);
      CHECK(tau < 1.0);
    }
  }
}

TEST_CASE("tau falls as stations are added") {
  double prev = 1.0;
  for (int n = 1; n <= 200; ++n) {
    const double tau = solve_tau(n, 16, 1024);
    CHECK(tau < prev);
    prev = tau;
  }
}

TEST_CASE("transmission probability is finite through p = 1/2") {
  const double a = transmission_probability(0.5 - 1e-9, 16, 6);
  const double b = transmission_probability(0.5, 16, 6);
  const double c = transmission_probability(0.5 + 1e-9, 16, 6);
  CHECK(std::isfinite(b));
  CHECK(b == doctest::Approx(a).epsilon(1e-6));
  CHECK(b == doctest::Approx(c).epsilon(1e-6));
}

TEST_CASE("tau rejects an empty network") {
  CHECK_THROWS_AS((void)solve_tau(0, 16, 1024), std::invalid_argument);
}

TEST_CASE("contention window doubling and clamp") {
  const auto p = default_parameters();
  CHECK(contention_window(0, p) == 16);
  CHECK(contention_window(3, p) == 128);
  CHECK(contention_window(6, p) == 1024);
  CHECK(contention_window(8, p) == 1024);
  CHECK(slot_support_max(0, p) == 15);
  CHECK(slot_support_max(1, p) == 46);
}

TEST_CASE("slot-count PMF edge values") {
  const auto p = default_parameters();
  const auto s0 = slots_given_collisions(0, p);
  REQUIRE(s0.probs.size() == 16);
  for (double v : s0.probs) CHECK(v == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  const auto s1 = slots_given_collisions(1, p);
  REQUIRE(s1.support_max() == 46);
  CHECK(s1.probs.front() == doctest::Approx(1.0 / 512.0).epsilon(1e-14));
  CHECK(s1.probs.back() == doctest::Approx(1.0 / 512.0).epsilon(1e-14));
  CHECK_THROWS_AS((void)slots_given_collisions(-1, p), std::out_of_range);
  CHECK_THROWS_AS((void)slots_given_collisions(8, p), std::out_of_range);
}

TEST_CASE("slot-count PMF equals exhaustive enumeration") {
  const auto p = default_parameters();
  for (int i = 0; i <= 2; ++i) {
    CAPTURE(i);
    std::vector<int> windows;
    std::uint64_t total = 1;
    for (int k = 0; k <= i; ++k) {
      windows.push_back(contention_window(k, p));
      total *= static_cast<std::uint64_t>(windows.back());
    }
    const auto counts = enumerate_counts(windows);
    const auto pmf = slots_given_collisions(i, p);
    REQUIRE(pmf.probs.size() == counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) {
      const double exact = static_cast<double>(counts[j]) / static_cast<double>(total);
      CHECK(std::abs(pmf.probs[j] - exact) <= 1e-14);
    }
  }
}

TEST_CASE("slot-count PMF mass and symmetry at every stage") {
  const auto p = default_parameters();
  for (int i = 0; i <= p.retry_limit; ++i) {
    const auto pmf = slots_given_collisions(i, p);
    CHECK(pmf.support_max() == slot_support_max(i, p));
    double mass = 0.0;
    for (double v : pmf.probs) {
      CHECK(v >= 0.0);
      mass += v;
    }
    CHECK(std::abs(mass - 1.0) <= 1e-12);
    const auto w = static_cast<std::size_t>(pmf.support_max());
    for (std::size_t j = 0; j <= w; ++j) {
      CHECK(std::abs(pmf.probs[j] - pmf.probs[w - j]) <= 1e-14);
    }
  }
}

TEST_CASE("collision distribution") {
  const auto one = collision_distribution(scenario(1, 1500));
  CHECK(one.probs[0] == 1.0);
  for (std::size_t i = 1; i < one.probs.size(); ++i) CHECK(one.probs[i] == 0.0);
  CHECK(one.discard_mass == 0.0);

  for (int n : {2, 4, 8, 16, 50}) {
    const auto c = collision_distribution(scenario(n, 1500));
    double sum = 0.0;
    for (double v : c.probs) sum += v;
    CHECK(std::abs(sum + c.discard_mass - 1.0) <= 1e-12);
    CHECK(c.discard_mass == doctest::Approx(std::pow(c.p_collision, 8)).epsilon(1e-12));
  }

  const auto four = collision_distribution(scenario(4, 1500));
  const double tau = solve_tau(4, 16, 1024);
  const double pc = 1.0 - std::pow(1.0 - tau, 3);
  CHECK(four.probs[1] == doctest::Approx(pc * (1.0 - pc)).epsilon(1e-12));
}

TEST_CASE("slot-time moments") {
  const auto sc1 = scenario(1, 1500);
  const auto ex1 = exchange_durations(sc1.params, 1500);
  const auto m1 = slot_time_moments(sc1, ex1);
  CHECK(m1.p_empty == 1.0);
  CHECK(m1.mean == doctest::Approx(sc1.params.slot_s).epsilon(1e-15));
  CHECK(m1.variance == 0.0);

  for (int n : {2, 3, 8, 30}) {
    const auto sc = scenario(n, 1500);
    const auto ex = exchange_durations(sc.params, 1500);
    const auto m = slot_time_moments(sc, ex);
    const double tau = solve_tau(n, 16, 1024);
    const double pe = std::pow(1.0 - tau, n - 1);
    const double pos = (n - 1) * tau * std::pow(1.0 - tau, n - 2);
    const double pcol = 1.0 - pe - pos;
    CHECK(m.p_empty == doctest::Approx(pe).epsilon(1e-12));
    CHECK(m.p_other_success == doctest::Approx(pos).epsilon(1e-12));
    const double mean = pe * sc.params.slot_s + pos * ex.t_success + pcol * ex.t_collision;
    const double second = pe * sc.params.slot_s * sc.params.slot_s +
                          pos * ex.t_success * ex.t_success +
                          pcol * ex.t_collision * ex.t_collision;
    CHECK(m.mean == doctest::Approx(mean).epsilon(1e-12));
    CHECK(m.variance == doctest::Approx(second - mean * mean).epsilon(1e-9));
    CHECK(m.variance >= 0.0);
  }

  const auto sc = scenario(5, 1500);
  const double slot = sc.params.slot_s;
  const ExchangeDurations flat{slot, 0.0, slot, slot};
  CHECK(slot_time_moments(sc, flat).variance == doctest::Approx(0.0).epsilon(1e-30));
}

TEST_CASE("conditional Gaussian") {
  const auto sc = scenario(2, 1500);
  const auto ex = exchange_durations(sc.params, 1500);
  const auto m = slot_time_moments(sc, ex);

  const auto g00 = conditional_gaussian(0, 0, m, ex);
  CHECK(g00.mean == doctest::Approx(ex.t_success).epsilon(1e-15));
  CHECK(g00.stddev == 0.0);

  const auto g = conditional_gaussian(2, 10, m, ex);
  CHECK(g.mean == doctest::Approx(10 * m.mean + 2 * ex.t_collision + ex.t_success).epsilon(1e-14));
  CHECK(conditional_gaussian(0, 8, m, ex).stddev ==
        doctest::Approx(std::sqrt(8 * m.variance)).epsilon(1e-14));

  CHECK(conditional_access_prob(g.mean, g) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(conditional_access_prob(g.mean + 1.959964 * g.stddev, g) - 0.975) < 1e-6);
  CHECK(conditional_access_prob(0.0, ConditionalGaussian{1e-3, 1e-5}) < 1e-20);

  CHECK(conditional_access_prob(ex.t_success - 1e-9, g00) == 0.0);
  CHECK(conditional_access_prob(ex.t_success, g00) == 1.0);
}

TEST_CASE("no access in a zero-length quiet period") {
  for (int n : {1, 2, 4, 16}) {
    CAPTURE(n);
    CHECK(BackoffAccessModel(scenario(n, 1500)).access_probability(0.0) == 0.0);
  }
}

TEST_CASE("access probability reaches the delivered mass") {
  for (int n : {1, 2, 4, 16}) {
    const BackoffAccessModel normalized(scenario(n, 1500));
    const BackoffAccessModel raw(scenario(n, 1500), ModelOptions{false, false});
    CHECK(std::abs(normalized.access_probability(10.0) - 1.0) <= 1e-9);
    CHECK(std::abs(raw.access_probability(10.0) - raw.delivered_mass()) <= 1e-9);
  }
  CHECK_THROWS_AS((void)BackoffAccessModel(scenario(2, 1500)).access_probability(-1e-3),
                  std::invalid_argument);
}

TEST_CASE("two stations, 1500 B, 3 ms quiet period") {
  const double pr = BackoffAccessModel(scenario(2, 1500)).access_probability(3e-3);
  CHECK(pr >= 0.10);
  CHECK(pr <= 0.25);
}

TEST_CASE("initial DIFS shifts the whole distribution") {
  const auto sc = scenario(3, 1000);
  const BackoffAccessModel base(sc);
  const BackoffAccessModel shifted(sc, ModelOptions{true, true});
  const double difs = sc.params.difs_s;
  for (double L : {1e-3, 2.5e-3, 7e-3}) {
    CHECK(shifted.access_probability(L + difs) == doctest::Approx(base.access_probability(L)).epsilon(1e-12));
  }
  CHECK(shifted.weighted_mean_delay() == doctest::Approx(base.weighted_mean_delay() + difs).epsilon(1e-12));
}

TEST_CASE("mean delay of a lone station is closed form") {
  const auto sc = scenario(1, 1500);
  const auto ex = exchange_durations(sc.params, 1500);
  const double expected = 7.5 * sc.params.slot_s + ex.t_success;
  const BackoffAccessModel model(sc);
  CHECK(model.mean_backoff_delay() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(model.weighted_mean_delay() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("mean delay needs the normalised CDF") {
  const BackoffAccessModel raw(scenario(2, 500), ModelOptions{false, false});
  CHECK_THROWS_AS((void)raw.mean_backoff_delay(), std::logic_error);
}

TEST_CASE("mean delay: two stations, 500 B") {
  const double d = BackoffAccessModel(scenario(2, 500)).mean_backoff_delay();
  CHECK(d >= 2.5e-3);
  CHECK(d <= 6e-3);
}

TEST_CASE("mean delay matches the weighted component means") {
  for (int n = 1; n <= 12; ++n) {
    for (std::int64_t bytes : {100, 500, 1000, 1500, 2304}) {
      const BackoffAccessModel model(scenario(n, bytes));
      const double integral = model.mean_backoff_delay();
      const double weighted = model.weighted_mean_delay();
      CHECK(std::abs(integral - weighted) / weighted <= 5e-3);
    }
  }
}

TEST_CASE("mean delay equals a plain trapezoid over the pointwise CDF") {
  for (auto [n, bytes] : {std::pair{2, std::int64_t{500}}}) {
    const BackoffAccessModel model(scenario(n, bytes));
    const double horizon = model.integration_horizon();
    const auto intervals = static_cast<std::size_t>(
        std::ceil(horizon / BackoffAccessModel::kIntegrationStep - 1e-9));
    const double h = horizon / static_cast<double>(intervals);
    double area = 0.0;
    for (std::size_t k = 0; k <= intervals; ++k) {
      const double f = 1.0 - model.access_probability(static_cast<double>(k) * h);
      area += (k == 0 || k == intervals) ? 0.5 * f : f;
    }
    area *= h;
    // The zero-variance steps fall between grid nodes in the plain sum, so
    // they are off by at most half a step each.
    CHECK(model.mean_backoff_delay() == doctest::Approx(area).epsilon(1e-3));
  }
}

TEST_CASE("CDF grid agrees with pointwise evaluation") {
  const BackoffAccessModel model(scenario(4, 1500));
  const double step = 37e-6;
  const auto grid = model.cdf_grid(step, 600);
  for (std::size_t k = 0; k < grid.size(); k += 13) {
    CHECK(grid[k] == doctest::Approx(model.access_probability(static_cast<double>(k) * step)).epsilon(1e-12));
  }
}

// Randomised invariants.  Scenarios come from a fixed-seed generator so a
// failure reproduces.
TEST_CASE("property: CDF is non-decreasing and within [0, 1]") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> pick_n(1, 20);
  std::uniform_int_distribution<int> pick_bytes(1, 2304);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = pick_n(rng);
    const int bytes = pick_bytes(rng);
    CAPTURE(n);
    CAPTURE(bytes);
    const BackoffAccessModel model(scenario(n, bytes));
    const auto cdf = model.cdf_grid(1e-6, 10001);
    CHECK(cdf.front() >= 0.0);
    for (std::size_t k = 1; k < cdf.size(); ++k) {
      if (cdf[k] < cdf[k - 1]) FAIL("CDF decreases at k = " << k);
      if (cdf[k] > 1.0) FAIL("CDF exceeds one at k = " << k);
    }
  }
}

TEST_CASE("property: more stations or longer frames never help") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> pick_n(1, 15);
  std::uniform_int_distribution<int> pick_bytes(40, 2000);
  std::uniform_real_distribution<double> pick_l(0.5e-3, 20e-3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = pick_n(rng);
    const int bytes = pick_bytes(rng);
    const double L = pick_l(rng);
    CAPTURE(n);
    CAPTURE(bytes);
    CAPTURE(L);
    const double base = BackoffAccessModel(scenario(n, bytes)).access_probability(L);
    CHECK(BackoffAccessModel(scenario(n + 1, bytes)).access_probability(L) <= base + 1e-12);
    CHECK(BackoffAccessModel(scenario(n, bytes + 200)).access_probability(L) <= base + 1e-12);
  }
}

TEST_CASE("property: mean delay grows with stations and payload") {
  for (std::int64_t bytes : {500, 1000, 1500}) {
    double prev = 0.0;
    for (int n = 1; n <= 10; ++n) {
      const double d = BackoffAccessModel(scenario(n, bytes)).mean_backoff_delay();
      CHECK(d > prev);
      prev = d;
    }
  }
}
