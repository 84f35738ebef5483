#include "lteu/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace lteu {

namespace {

using json = nlohmann::json;

constexpr double kUs = 1e-6;

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : fmt::format("{}.{}", path, key);
}

std::string index(const std::string& path, std::size_t i) {
  return fmt::format("{}[{}]", path, i);
}

void expect_object(const json& node, const std::string& path) {
  if (!node.is_object()) throw ConfigError(path.empty() ? "document" : path, "expected an object");
}

void reject_unknown(const json& node, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : node.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(join(path, key), "unknown key");
    }
  }
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path, "expected a finite number");
  return x;
}

std::int64_t as_integer(const json& v, const std::string& path, std::int64_t lo,
                        std::int64_t hi = std::numeric_limits<std::int64_t>::max()) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < lo || x > hi) {
    throw ConfigError(path, fmt::format("value {} outside [{}, {}]", x, lo, hi));
  }
  return x;
}

double positive(const json& v, const std::string& path) {
  const double x = as_number(v, path);
  if (x <= 0.0) throw ConfigError(path, "must be > 0");
  return x;
}

double non_negative(const json& v, const std::string& path) {
  const double x = as_number(v, path);
  if (x < 0.0) throw ConfigError(path, "must be >= 0");
  return x;
}

const json* find(const json& node, std::string_view key) {
  const auto it = node.find(std::string(key));
  return it == node.end() ? nullptr : &*it;
}

const json& non_empty_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path, "expected an array");
  if (v.empty()) throw ConfigError(path, "must not be empty");
  return v;
}

std::string read_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  return v.get<std::string>();
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError(fmt::format("line {}, column {}", line, column), "malformed JSON");
  }
}

PhyProfile read_profile(const json& node, const std::string& path) {
  expect_object(node, path);
  reject_unknown(node, path,
                 {"name", "data_rate_mbps", "control_rate_mbps", "preamble_us", "symbol_us"});
  PhyProfile p;
  for (auto key : {"name", "data_rate_mbps", "control_rate_mbps", "preamble_us", "symbol_us"}) {
    if (!find(node, key)) throw ConfigError(join(path, key), "missing");
  }
  p.name = read_string(node["name"], join(path, "name"));
  p.data_rate_bps = positive(node["data_rate_mbps"], join(path, "data_rate_mbps")) * 1e6;
  p.control_rate_bps =
      positive(node["control_rate_mbps"], join(path, "control_rate_mbps")) * 1e6;
  p.preamble_header_s = non_negative(node["preamble_us"], join(path, "preamble_us")) * kUs;
  p.symbol_s = positive(node["symbol_us"], join(path, "symbol_us")) * kUs;
  return p;
}

DcfConfig read_dcf(const json& node, const std::string& path) {
  expect_object(node, path);
  reject_unknown(node, path,
                 {"slot_us", "sifs_us", "difs_us", "eifs_us", "cw_min", "cw_max", "retry_limit",
                  "ack_bytes", "mac_overhead_bytes", "profiles"});
  DcfConfig cfg = default_dcf_config();
  auto& b = cfg.base;
  if (auto* v = find(node, "slot_us")) b.slot_s = positive(*v, join(path, "slot_us")) * kUs;
  if (auto* v = find(node, "sifs_us")) b.sifs_s = positive(*v, join(path, "sifs_us")) * kUs;
  if (auto* v = find(node, "difs_us")) b.difs_s = positive(*v, join(path, "difs_us")) * kUs;
  if (auto* v = find(node, "eifs_us")) b.eifs_override_s = positive(*v, join(path, "eifs_us")) * kUs;
  if (auto* v = find(node, "cw_min")) b.cw_min = static_cast<int>(as_integer(*v, join(path, "cw_min"), 2, 1 << 20));
  if (auto* v = find(node, "cw_max")) b.cw_max = static_cast<int>(as_integer(*v, join(path, "cw_max"), 2, 1 << 20));
  if (auto* v = find(node, "retry_limit")) b.retry_limit = static_cast<int>(as_integer(*v, join(path, "retry_limit"), 0, 32));
  if (auto* v = find(node, "ack_bytes")) b.ack_bytes = as_integer(*v, join(path, "ack_bytes"), 1);
  if (auto* v = find(node, "mac_overhead_bytes")) b.mac_overhead_bytes = as_integer(*v, join(path, "mac_overhead_bytes"), 0);

  if (auto* v = find(node, "profiles")) {
    const auto p = join(path, "profiles");
    non_empty_array(*v, p);
    cfg.profiles.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      auto profile = read_profile((*v)[i], index(p, i));
      for (const auto& existing : cfg.profiles) {
        if (existing.name == profile.name) {
          throw ConfigError(index(p, i), fmt::format("duplicate profile '{}'", profile.name));
        }
      }
      cfg.profiles.push_back(std::move(profile));
    }
  }
  // Validate the timing block against every profile it can be paired with.
  for (const auto& profile : cfg.profiles) {
    DcfParameters candidate = b;
    candidate.phy = profile;
    try {
      candidate.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(path.empty() ? "dcf" : path, e.what());
    }
  }
  b.phy = cfg.profiles.front();
  return cfg;
}

std::vector<double> read_quiet_grid(const json& v, const std::string& path) {
  std::vector<double> grid;
  if (v.is_array()) {
    non_empty_array(v, path);
    for (std::size_t i = 0; i < v.size(); ++i) grid.push_back(non_negative(v[i], index(path, i)));
  } else if (v.is_object()) {
    reject_unknown(v, path, {"start", "stop", "step"});
    for (auto key : {"start", "stop", "step"}) {
      if (!find(v, key)) throw ConfigError(join(path, key), "missing");
    }
    const double start = non_negative(v["start"], join(path, "start"));
    const double stop = non_negative(v["stop"], join(path, "stop"));
    const double step = positive(v["step"], join(path, "step"));
    if (stop < start) throw ConfigError(join(path, "stop"), "must be >= start");
    const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 10'000'000) throw ConfigError(path, "grid too large");
    for (std::int64_t k = 0; k < count; ++k) grid.push_back(start + static_cast<double>(k) * step);
  } else {
    throw ConfigError(path, "expected an array or {start, stop, step}");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ConfigError(index(path, i), "grid must be strictly increasing");
  }
  return grid;
}

SweepSpec read_sweep(const json& node, const std::string& path) {
  expect_object(node, path);
  reject_unknown(node, path, {"n_stations", "payload_bytes", "l_grid_us"});
  SweepSpec s;
  if (auto* v = find(node, "n_stations")) {
    const auto p = join(path, "n_stations");
    non_empty_array(*v, p);
    s.n_stations.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      s.n_stations.push_back(static_cast<int>(as_integer((*v)[i], index(p, i), 1, 1000)));
    }
  }
  if (auto* v = find(node, "payload_bytes")) {
    const auto p = join(path, "payload_bytes");
    non_empty_array(*v, p);
    s.payload_bytes.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      s.payload_bytes.push_back(as_integer((*v)[i], index(p, i), 1, 1 << 20));
    }
  }
  if (auto* v = find(node, "l_grid_us")) s.quiet_grid_us = read_quiet_grid(*v, join(path, "l_grid_us"));
  return s;
}

SimulationSpec read_simulation(const json& node, const std::string& path) {
  expect_object(node, path);
  reject_unknown(node, path,
                 {"n_packets", "seed", "alignment", "decrement", "warmup_slots", "gating"});
  SimulationSpec s;
  if (auto* v = find(node, "n_packets")) s.n_packets = as_integer(*v, join(path, "n_packets"), 1);
  if (auto* v = find(node, "seed")) {
    if (!v->is_number_unsigned()) throw ConfigError(join(path, "seed"), "expected an unsigned integer");
    s.seed = v->get<std::uint64_t>();
  }
  if (auto* v = find(node, "warmup_slots")) s.warmup_slots = as_integer(*v, join(path, "warmup_slots"), 0);
  if (auto* v = find(node, "alignment")) {
    const auto p = join(path, "alignment");
    const auto name = read_string(*v, p);
    if (name == "free_running") {
      s.alignment = Alignment::free_running;
    } else if (name == "quiet_start_aligned") {
      s.alignment = Alignment::quiet_start_aligned;
    } else {
      throw ConfigError(p, "expected free_running or quiet_start_aligned");
    }
  }
  if (auto* v = find(node, "decrement")) {
    const auto p = join(path, "decrement");
    const auto name = read_string(*v, p);
    if (name == "per_slot_time") {
      s.decrement = DecrementRule::per_slot_time;
    } else if (name == "idle_only") {
      s.decrement = DecrementRule::idle_only;
    } else {
      throw ConfigError(p, "expected per_slot_time or idle_only");
    }
  }
  if (auto* v = find(node, "gating")) {
    const auto p = join(path, "gating");
    expect_object(*v, p);
    reject_unknown(*v, p, {"quiet_subframes", "period_subframes"});
    for (auto key : {"quiet_subframes", "period_subframes"}) {
      if (!find(*v, key)) throw ConfigError(join(p, key), "missing");
    }
    const auto period = as_integer((*v)["period_subframes"], join(p, "period_subframes"), 1, 10000);
    const auto quiet = as_integer((*v)["quiet_subframes"], join(p, "quiet_subframes"), 0, period);
    s.gating = DutyCycleSchedule(static_cast<int>(quiet), static_cast<int>(period));
  }
  return s;
}

LteSpec read_lte(const json& node, const std::string& path) {
  expect_object(node, path);
  reject_unknown(node, path, {"mode", "pdcch_symbols", "crs_symbol_positions", "tdd_config", "mute"});
  LteSpec s;
  if (auto* v = find(node, "mode")) {
    const auto p = join(path, "mode");
    const auto name = read_string(*v, p);
    if (name == "fdd") {
      s.mode = LteMode::fdd;
    } else if (name == "tdd") {
      s.mode = LteMode::tdd;
    } else {
      throw ConfigError(p, "expected fdd or tdd");
    }
  }
  if (auto* v = find(node, "pdcch_symbols")) {
    s.fdd.pdcch_symbols = static_cast<int>(as_integer(*v, join(path, "pdcch_symbols"), 1, 3));
  }
  if (auto* v = find(node, "crs_symbol_positions")) {
    const auto p = join(path, "crs_symbol_positions");
    if (!v->is_array()) throw ConfigError(p, "expected an array");
    s.fdd.crs_symbol_positions.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      s.fdd.crs_symbol_positions.push_back(static_cast<int>(as_integer((*v)[i], index(p, i), 0, 6)));
    }
  }
  if (auto* v = find(node, "tdd_config")) {
    s.tdd.config_index = static_cast<int>(as_integer(*v, join(path, "tdd_config"), 0, 6));
  }
  s.tdd.muted_subframes = all_uplink_mask(s.tdd.config_index);
  if (auto* v = find(node, "mute")) {
    const auto p = join(path, "mute");
    if (!v->is_array()) throw ConfigError(p, "expected an array");
    std::vector<int> subframes;
    for (std::size_t i = 0; i < v->size(); ++i) {
      subframes.push_back(static_cast<int>(as_integer((*v)[i], index(p, i), 0, 9)));
    }
    s.tdd.muted_subframes = subframe_mask(subframes);
  }
  try {
    s.tdd.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(join(path, "mute"), e.what());
  }
  return s;
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct SweepPoint {
  int n_stations;
  std::int64_t payload_bytes;
};

std::vector<SweepPoint> sweep_points(const SweepSpec& sweep) {
  std::vector<SweepPoint> points;
  for (int n : sorted_unique(sweep.n_stations)) {
    for (auto payload : sorted_unique(sweep.payload_bytes)) points.push_back({n, payload});
  }
  return points;
}

// Evaluates fn over the points concurrently, results kept in point order.
template <class Fn>
auto map_points(const std::vector<SweepPoint>& points, Fn fn) {
  using Result = decltype(fn(points.front(), std::size_t{0}));
  std::vector<std::future<Result>> futures;
  futures.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    futures.push_back(std::async(std::launch::async, fn, points[k], k));
  }
  std::vector<Result> out;
  out.reserve(points.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::string format_double(double x) { return fmt::format("{}", x); }

}  // namespace

ScenarioFile parse_scenario(std::string_view json_text) {
  const json doc = parse_text(json_text);
  expect_object(doc, "");
  reject_unknown(doc, "", {"dcf", "phy_profile", "model", "sweep", "simulation", "lte"});
  ScenarioFile file;
  if (auto* v = find(doc, "dcf")) file.dcf = read_dcf(*v, "dcf");
  if (auto* v = find(doc, "phy_profile")) {
    file.phy_profile = read_string(*v, "phy_profile");
  } else if (find(doc, "dcf") && find(doc["dcf"], "profiles")) {
    file.phy_profile = file.dcf.profiles.front().name;
  }
  try {
    file.dcf.base.phy = file.dcf.profile(file.phy_profile);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("phy_profile", e.what());
  }
  if (auto* v = find(doc, "model")) {
    expect_object(*v, "model");
    reject_unknown(*v, "model", {"normalize_on_success", "count_initial_difs"});
    if (auto* b = find(*v, "normalize_on_success")) {
      if (!b->is_boolean()) throw ConfigError("model.normalize_on_success", "expected a boolean");
      file.model.normalize_on_success = b->get<bool>();
    }
    if (auto* b = find(*v, "count_initial_difs")) {
      if (!b->is_boolean()) throw ConfigError("model.count_initial_difs", "expected a boolean");
      file.model.count_initial_difs = b->get<bool>();
    }
  }
  if (auto* v = find(doc, "sweep")) file.sweep = read_sweep(*v, "sweep");
  if (auto* v = find(doc, "simulation")) file.simulation = read_simulation(*v, "simulation");
  if (auto* v = find(doc, "lte")) file.lte = read_lte(*v, "lte");
  return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

DcfConfig parse_dcf_config(std::string_view json_text) {
  return read_dcf(parse_text(json_text), "");
}

std::vector<AccessRow> access_prob_rows(const ScenarioFile& file) {
  const auto points = sweep_points(file.sweep);
  const auto grid = file.sweep.quiet_grid_us;
  auto per_point = map_points(points, [&](SweepPoint pt, std::size_t) {
    const BackoffAccessModel model(file.scenario(pt.n_stations, pt.payload_bytes), file.model);
    std::vector<AccessRow> rows;
    rows.reserve(grid.size());
    for (double l_us : grid) {
      rows.push_back({pt.n_stations, pt.payload_bytes, l_us, model.access_probability(l_us * kUs)});
    }
    return rows;
  });
  std::vector<AccessRow> rows;
  for (auto& block : per_point) rows.insert(rows.end(), block.begin(), block.end());
  return rows;
}

std::vector<MeanDelayRow> mean_delay_rows(const ScenarioFile& file) {
  return map_points(sweep_points(file.sweep), [&](SweepPoint pt, std::size_t) {
    const BackoffAccessModel model(file.scenario(pt.n_stations, pt.payload_bytes), file.model);
    return MeanDelayRow{pt.n_stations, pt.payload_bytes, model.mean_backoff_delay() / kUs};
  });
}

QuietPeriodResult quiet_period(const ScenarioFile& file) {
  const double seconds = file.lte.mode == LteMode::fdd ? fdd_max_quiet(file.lte.fdd)
                                                       : tdd_max_quiet(file.lte.tdd);
  return {file.lte.mode, seconds / kUs};
}

std::string render(const std::vector<AccessRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"N", r.n_stations},
                     {"payload_bytes", r.payload_bytes},
                     {"L_us", r.quiet_us},
                     {"pr_access", std::round(r.pr_access * 1e6) / 1e6}});
    }
    return out.dump(2) + "\n";
  }
  std::string csv = "N,payload_bytes,L_us,pr_access\n";
  for (const auto& r : rows) {
    csv += fmt::format("{},{},{},{:.6f}\n", r.n_stations, r.payload_bytes,
                       format_double(r.quiet_us), r.pr_access);
  }
  return csv;
}

std::string render(const std::vector<MeanDelayRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"N", r.n_stations},
                     {"payload_bytes", r.payload_bytes},
                     {"mean_delay_us", std::round(r.mean_delay_us * 1e3) / 1e3}});
    }
    return out.dump(2) + "\n";
  }
  std::string csv = "N,payload_bytes,mean_delay_us\n";
  for (const auto& r : rows) {
    csv += fmt::format("{},{},{:.3f}\n", r.n_stations, r.payload_bytes, r.mean_delay_us);
  }
  return csv;
}

std::string render(const QuietPeriodResult& result, OutputFormat format) {
  if (format == OutputFormat::json) {
    json out = {{"mode", to_string(result.mode)},
                {"max_quiet_us", std::round(result.max_quiet_us * 100.0) / 100.0}};
    return out.dump(2) + "\n";
  }
  return fmt::format("mode,max_quiet_us\n{},{:.2f}\n", to_string(result.mode), result.max_quiet_us);
}

SimulationOutcome simulate(const ScenarioFile& file, int n_stations, std::int64_t payload_bytes) {
  SimConfig cfg;
  cfg.scenario = file.scenario(n_stations, payload_bytes);
  cfg.n_packets = file.simulation.n_packets;
  cfg.seed = file.simulation.seed;
  cfg.gating = file.simulation.gating;
  cfg.alignment = file.simulation.alignment;
  cfg.decrement = file.simulation.decrement;
  cfg.warmup_slots = file.simulation.warmup_slots;
  ModelOptions options = file.model;
  options.normalize_on_success = true;
  const BackoffAccessModel model(cfg.scenario, options);
  SimulationOutcome out{run(cfg), 0.0, model.weighted_mean_delay() / kUs};
  out.ks_vs_analytic = ks_distance(out.report, model);
  return out;
}

std::string render(const SimulationOutcome& outcome, OutputFormat format) {
  const auto& r = outcome.report;
  if (format == OutputFormat::csv) {
    std::string csv = "delay_us\n";
    for (double d : r.delays) csv += fmt::format("{:.3f}\n", d / kUs);
    return csv;
  }
  json out = {{"mean_us", r.mean_delay / kUs},
              {"analytic_mean_us", outcome.analytic_mean_us},
              {"ks_vs_analytic", outcome.ks_vs_analytic},
              {"collision_hist", r.collision_histogram},
              {"discarded", r.discarded},
              {"slot_time_mean_us", r.slot_time_mean / kUs},
              {"slot_time_var_us2", r.slot_time_variance / (kUs * kUs)},
              {"seed", r.seed},
              {"rng", r.rng},
              {"n_packets", r.n_packets}};
  if (r.access_success_fraction) out["access_success_fraction"] = *r.access_success_fraction;
  return out.dump(2) + "\n";
}

ValidationSummary validate(const ScenarioFile& file) {
  const auto points = sweep_points(file.sweep);
  const auto& sim = file.simulation;
  const bool enough = sim.n_packets >= kValidateMinPackets;

  ValidationSummary summary;
  summary.seed = sim.seed;
  summary.n_packets = sim.n_packets;
  summary.points = map_points(points, [&](SweepPoint pt, std::size_t k) {
    SimConfig cfg;
    cfg.scenario = file.scenario(pt.n_stations, pt.payload_bytes);
    cfg.n_packets = sim.n_packets;
    cfg.seed = derive_seed(sim.seed, k);
    cfg.decrement = sim.decrement;
    cfg.warmup_slots = sim.warmup_slots;
    ModelOptions options = file.model;
    options.normalize_on_success = true;
    const BackoffAccessModel model(cfg.scenario, options);
    const auto report = run(cfg);

    ValidationPoint p{};
    p.n_stations = pt.n_stations;
    p.payload_bytes = pt.payload_bytes;
    p.seed = cfg.seed;
    p.ks_distance = ks_distance(report, model);
    p.analytic_mean_us = model.mean_backoff_delay() / kUs;
    p.sim_mean_us = report.mean_delay / kUs;
    p.rel_err = std::abs(p.analytic_mean_us - p.sim_mean_us) / p.sim_mean_us;
    if (!enough) {
      p.status = ValidationStatus::insufficient_samples;
    } else {
      p.status = p.ks_distance <= kValidateKsThreshold && p.rel_err <= kValidateRelErrThreshold
                     ? ValidationStatus::pass
                     : ValidationStatus::fail;
    }
    return p;
  });

  if (!enough) {
    summary.overall = ValidationStatus::insufficient_samples;
  } else {
    const bool all = std::all_of(summary.points.begin(), summary.points.end(),
                                 [](const auto& p) { return p.status == ValidationStatus::pass; });
    summary.overall = all ? ValidationStatus::pass : ValidationStatus::fail;
  }
  return summary;
}

std::string render(const ValidationSummary& summary) {
  json points = json::array();
  for (const auto& p : summary.points) {
    points.push_back({{"N", p.n_stations},
                      {"payload_bytes", p.payload_bytes},
                      {"seed", p.seed},
                      {"ks_distance", p.ks_distance},
                      {"analytic_mean_us", p.analytic_mean_us},
                      {"sim_mean_us", p.sim_mean_us},
                      {"rel_err", p.rel_err},
                      {"status", to_string(p.status)}});
  }
  json out = {{"rng", "mt19937_64"},
              {"seed", summary.seed},
              {"n_packets", summary.n_packets},
              {"thresholds",
               {{"ks_distance", kValidateKsThreshold},
                {"rel_err", kValidateRelErrThreshold},
                {"min_packets", kValidateMinPackets}}},
              {"points", points},
              {"overall", to_string(summary.overall)}};
  return out.dump(2) + "\n";
}

std::string_view to_string(ValidationStatus status) {
  switch (status) {
    case ValidationStatus::pass:
      return "pass";
    case ValidationStatus::fail:
      return "fail";
    case ValidationStatus::insufficient_samples:
      return "insufficient samples";
  }
  return "unknown";
}

std::string_view to_string(LteMode mode) { return mode == LteMode::fdd ? "fdd" : "tdd"; }

}  // namespace lteu
