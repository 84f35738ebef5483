#include <doctest.h>

#include <string>

#include <json.hpp>

#include "lteu/scenario.hpp"

using namespace lteu;

namespace {

std::string where_of(const std::string& text) {
  try {
    (void)parse_scenario(text);
  } catch (const ConfigError& e) {
    return e.where();
  }
  return "<parsed>";
}

}  // namespace

TEST_CASE("empty document keeps every default") {
  const auto f = parse_scenario("{}");
  CHECK(f.phy_profile == kCalibrationProfile);
  CHECK(f.sweep.n_stations == std::vector<int>{2});
  CHECK(f.simulation.seed == 1);
  CHECK(f.model.normalize_on_success);
  CHECK(f.parameters().cw_max == 1024);
}

TEST_CASE("full document") {
  const auto f = parse_scenario(R"({
    "dcf": {"slot_us": 20, "sifs_us": 10, "difs_us": 50, "cw_min": 32, "cw_max": 1024,
            "retry_limit": 6, "ack_bytes": 14, "mac_overhead_bytes": 34,
            "profiles": [{"name": "a", "data_rate_mbps": 11, "control_rate_mbps": 2,
                          "preamble_us": 192, "symbol_us": 1}]},
    "model": {"count_initial_difs": true},
    "sweep": {"n_stations": [2, 4], "payload_bytes": [500],
              "l_grid_us": {"start": 500, "stop": 3000, "step": 500}},
    "simulation": {"n_packets": 1234, "seed": 99, "alignment": "free_running",
                   "decrement": "idle_only", "warmup_slots": 5,
                   "gating": {"quiet_subframes": 3, "period_subframes": 10}},
    "lte": {"mode": "tdd", "tdd_config": 3, "mute": [2, 3, 4]}
  })");
  CHECK(f.phy_profile == "a");
  CHECK(f.parameters().slot_s == doctest::Approx(20e-6));
  CHECK(f.parameters().retry_limit == 6);
  CHECK(f.model.count_initial_difs);
  CHECK(f.sweep.quiet_grid_us == std::vector<double>{500, 1000, 1500, 2000, 2500, 3000});
  CHECK(f.simulation.n_packets == 1234);
  CHECK(f.simulation.alignment == Alignment::free_running);
  CHECK(f.simulation.decrement == DecrementRule::idle_only);
  REQUIRE(f.simulation.gating.has_value());
  CHECK(f.simulation.gating->quiet_subframes() == 3);
  CHECK(quiet_period(f).max_quiet_us == doctest::Approx(3000.0));
}

TEST_CASE("errors name the offending field") {
  CHECK(where_of(R"({"sweep": {"n_stations": [2, 0]}})") == "sweep.n_stations[1]");
  CHECK(where_of(R"({"sweep": {"payload_bytes": [0]}})") == "sweep.payload_bytes[0]");
  CHECK(where_of(R"({"sweep": {"l_grid_us": [100, 50]}})").rfind("sweep.l_grid_us", 0) == 0);
  CHECK(where_of(R"({"sweep": {"bogus": 1}})") == "sweep.bogus");
  CHECK(where_of(R"({"nope": 1})") == "nope");
  CHECK(where_of(R"({"phy_profile": "missing"})") == "phy_profile");
  CHECK(where_of(R"({"dcf": {"cw_max": 1000}})") == "dcf");
  CHECK(where_of(R"({"simulation": {"seed": -1}})") == "simulation.seed");
  CHECK(where_of(R"({"simulation": {"alignment": "sideways"}})") == "simulation.alignment");
  CHECK(where_of(R"({"lte": {"tdd_config": 7}})") == "lte.tdd_config");
  CHECK(where_of(R"({"lte": {"pdcch_symbols": 4}})") == "lte.pdcch_symbols");
  CHECK(where_of(R"({"lte": {"mode": "tdd", "tdd_config": 0, "mute": [1]}})") == "lte.mute");
  CHECK(where_of(R"({"model": {"normalize_on_success": 1}})") == "model.normalize_on_success");
}

TEST_CASE("syntax errors carry line and column") {
  const auto where = where_of("{\n  \"sweep\": {,}\n}");
  CHECK(where.rfind("line 2, column", 0) == 0);
}

TEST_CASE("access rows are sorted") {
  auto f = parse_scenario(R"({"sweep": {"n_stations": [8, 2, 4, 2], "payload_bytes": [1500, 500],
                                        "l_grid_us": [0, 1000, 3000]}})");
  const auto rows = access_prob_rows(f);
  REQUIRE(rows.size() == 3 * 2 * 3);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& a = rows[k - 1];
    const auto& b = rows[k];
    const bool ordered = a.n_stations < b.n_stations ||
                         (a.n_stations == b.n_stations && (a.payload_bytes < b.payload_bytes ||
                          (a.payload_bytes == b.payload_bytes && a.quiet_us < b.quiet_us)));
    CHECK(ordered);
  }
  const auto csv = render(rows, OutputFormat::csv);
  CHECK(csv.rfind("N,payload_bytes,L_us,pr_access\n", 0) == 0);
  CHECK(csv.find("\r") == std::string::npos);
  const auto js = nlohmann::json::parse(render(rows, OutputFormat::json));
  CHECK(js.size() == rows.size());
}

TEST_CASE("zero-length quiet period row") {
  auto f = parse_scenario(R"({"sweep": {"n_stations": [2], "payload_bytes": [1500], "l_grid_us": [0]}})");
  const auto rows = access_prob_rows(f);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].pr_access == 0.0);
}

TEST_CASE("payload ordering at four stations") {
  auto f = parse_scenario(R"({"sweep": {"n_stations": [4], "payload_bytes": [500, 1000, 1500],
                                        "l_grid_us": [3000]}})");
  const auto rows = access_prob_rows(f);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].pr_access > rows[1].pr_access);
  CHECK(rows[1].pr_access > rows[2].pr_access);
}

TEST_CASE("mean-delay rows") {
  auto f = parse_scenario(R"({"sweep": {"n_stations": [1, 2], "payload_bytes": [500]}})");
  const auto rows = mean_delay_rows(f);
  REQUIRE(rows.size() == 2);
  const auto p = f.parameters();
  const double lone = (7.5 * p.slot_s + exchange_durations(p, 500).t_success) * 1e6;
  CHECK(rows[0].mean_delay_us == doctest::Approx(lone).epsilon(1e-12));
  CHECK(rows[1].mean_delay_us >= 2500.0);
  CHECK(rows[1].mean_delay_us <= 6000.0);
  CHECK(render(rows, OutputFormat::csv).rfind("N,payload_bytes,mean_delay_us\n", 0) == 0);
}

TEST_CASE("quiet-period rendering") {
  ScenarioFile f;
  CHECK(render(quiet_period(f), OutputFormat::csv) == "mode,max_quiet_us\nfdd,214.29\n");
  f.lte.mode = LteMode::tdd;
  f.lte.tdd = TddConfig{0, all_uplink_mask(0)};
  CHECK(render(quiet_period(f), OutputFormat::csv) == "mode,max_quiet_us\ntdd,3000.00\n");
}

TEST_CASE("validate flags too few samples") {
  auto f = parse_scenario(R"({"sweep": {"n_stations": [2], "payload_bytes": [1500]},
                              "simulation": {"n_packets": 10}})");
  const auto s = validate(f);
  CHECK(s.overall == ValidationStatus::insufficient_samples);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].status == ValidationStatus::insufficient_samples);
  const auto js = nlohmann::json::parse(render(s));
  CHECK(js["overall"] == "insufficient samples");
}

TEST_CASE("validate is reproducible") {
  auto f = parse_scenario(R"({"sweep": {"n_stations": [2, 4], "payload_bytes": [500]},
                              "simulation": {"n_packets": 3000, "seed": 11}})");
  CHECK(render(validate(f)) == render(validate(f)));
  auto g = f;
  g.simulation.seed = 12;
  CHECK(render(validate(f)) != render(validate(g)));
}

TEST_CASE("simulate summary") {
  auto f = parse_scenario(R"({"simulation": {"n_packets": 2000, "seed": 5}})");
  const auto out = simulate(f, 2, 1500);
  const auto js = nlohmann::json::parse(render(out, OutputFormat::json));
  CHECK(js["n_packets"] == 2000);
  CHECK(js["seed"] == 5);
  CHECK(js["collision_hist"].size() == 8);
  const auto csv = render(out, OutputFormat::csv);
  CHECK(csv.rfind("delay_us\n", 0) == 0);
}
