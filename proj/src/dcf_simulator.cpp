#include "lteu/dcf_simulator.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace lteu {

namespace {

struct Station {
  int counter = 0;
  int stage = 0;
};

// Running mean/variance (Welford).
struct Moments {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  [[nodiscard]] double variance() const {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  }
};

}  // namespace

void SimConfig::validate() const {
  scenario.validate();
  if (n_packets < 1) throw std::invalid_argument("simulation needs n_packets >= 1");
  if (warmup_slots < 0) throw std::invalid_argument("warmup_slots must be >= 0");
  if (gating && gating->never_quiet() && alignment == Alignment::free_running) {
    throw std::invalid_argument("free-running gating needs a non-empty quiet interval");
  }
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be > 0");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SimReport run(const SimConfig& cfg) {
  cfg.validate();
  const auto& params = cfg.scenario.params;
  const auto ex = exchange_durations(params, cfg.scenario.payload_bytes);
  const int n = cfg.scenario.n_stations;
  const bool gated = cfg.gating.has_value();
  const bool free_running = gated && cfg.alignment == Alignment::free_running;

  std::mt19937_64 rng(cfg.seed);
  auto draw = [&](int stage) {
    return static_cast<int>(uniform_below(rng, contention_window(stage, params)));
  };
  std::vector<Station> stations(n);
  for (auto& s : stations) s.counter = draw(0);

  SimReport report;
  report.seed = cfg.seed;
  report.n_packets = cfg.n_packets;
  report.collision_histogram.assign(params.retry_limit + 1, 0);
  report.delays.reserve(static_cast<std::size_t>(cfg.n_packets));

  Moments slot_times;
  std::int64_t successes_in_quiet = 0;
  double t = 0.0;
  double tagged_start = 0.0;
  int tagged_collisions = 0;
  bool recording = cfg.warmup_slots == 0;
  std::int64_t slots = 0;
  std::vector<int> transmitters;
  transmitters.reserve(n);

  while (static_cast<std::int64_t>(report.delays.size()) < cfg.n_packets) {
    if (free_running && !cfg.gating->is_quiet(t)) t = cfg.gating->next_quiet_start(t);
    const double slot_start = t;

    transmitters.clear();
    for (int s = 0; s < n; ++s) {
      if (stations[s].counter == 0) transmitters.push_back(s);
    }
    double duration = params.slot_s;
    if (transmitters.size() == 1) {
      duration = ex.t_success;
    } else if (transmitters.size() > 1) {
      duration = ex.t_collision;
    }
    t += duration;
    ++slots;

    const bool tagged_sent = stations[0].counter == 0;
    if (recording && !tagged_sent) slot_times.add(duration);

    const bool busy = !transmitters.empty();
    if (!busy || cfg.decrement == DecrementRule::per_slot_time) {
      for (auto& s : stations) {
        if (s.counter > 0) --s.counter;
      }
    }

    const bool success = transmitters.size() == 1;
    for (int s : transmitters) {
      auto& st = stations[s];
      bool done = success;
      if (success) {
        if (s == 0 && recording) {
          report.delays.push_back(t - tagged_start);
          ++report.collision_histogram[tagged_collisions];
          if (gated) {
            bool inside = true;
            if (free_running) {
              inside = cfg.gating->always_quiet() || t <= cfg.gating->quiet_end(slot_start);
            } else if (!cfg.gating->always_quiet()) {
              inside = t - tagged_start < cfg.gating->quiet_s();
            }
            if (inside) ++successes_in_quiet;
          }
        }
        st.stage = 0;
      } else {
        ++st.stage;
        if (s == 0) ++tagged_collisions;
        if (st.stage > params.retry_limit) {
          if (s == 0 && recording) ++report.discarded;
          st.stage = 0;
          done = true;
        }
      }
      if (s == 0 && done) {
        tagged_collisions = 0;
        if (!recording && slots >= cfg.warmup_slots) recording = true;
        tagged_start = t;
      }
      st.counter = draw(st.stage);
    }
  }

  const auto& d = report.delays;
  report.mean_delay = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
  report.slot_time_count = slot_times.count;
  report.slot_time_mean = slot_times.mean;
  report.slot_time_variance = slot_times.variance();
  if (gated) {
    report.access_success_fraction =
        static_cast<double>(successes_in_quiet) / static_cast<double>(d.size());
  }
  return report;
}

SimReport gated_run(const SimConfig& cfg) {
  if (!cfg.gating) throw std::invalid_argument("gated_run needs a duty-cycle schedule");
  return run(cfg);
}

double ks_distance(const SimReport& report, const BackoffAccessModel& model) {
  std::vector<double> sorted = report.delays;
  std::sort(sorted.begin(), sorted.end());
  return ks_distance(std::span<const double>(sorted),
                     [&](double x) { return model.access_probability(x); });
}

}  // namespace lteu
