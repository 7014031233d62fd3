#include <doctest.h>

#include <cmath>

#include "pauliseq/experiments.hpp"

using namespace pauliseq;

namespace {

ExperimentConfig quick_config() {
  ExperimentConfig cfg;
  cfg.gate = get_gate("move");
  cfg.pulse.gap = 5.0;
  cfg.pulse.gate_time = 6.0;
  cfg.pulse.samples = 1024;
  cfg.runs = 8;
  cfg.seed = 11;
  return cfg;
}

}  // namespace

TEST_CASE("noise-free configs collapse to one deterministic run") {
  ExperimentConfig cfg = quick_config();
  const McPoint a = mc_estimate(cfg);
  CHECK(a.runs == 1);
  CHECK(a.sem_error == 0.0);
  const McPoint b = mc_estimate(cfg);
  CHECK(a.mean_error == b.mean_error);
}

TEST_CASE("mc_estimate is reproducible and order-fixed under threading") {
  ExperimentConfig cfg = quick_config();
  cfg.noise.mode = NoiseMode::Dc;
  cfg.noise.sigma_f = 0.1;
  const McPoint a = mc_estimate(cfg);
  const McPoint b = mc_estimate(cfg);
  CHECK(a.mean_error == b.mean_error);
  CHECK(a.sem_error == b.sem_error);
  CHECK(a.runs == 8);
  CHECK(a.sem_error > 0.0);
}

TEST_CASE("run_sweep emits one row per value and a digest") {
  ExperimentConfig cfg = quick_config();
  const SweepResult res = run_sweep(cfg, SweepVariable::GateTime, {4.0, 6.0});
  REQUIRE(res.rows.size() == 2);
  CHECK(res.rows[0].variable == "gate_time");
  CHECK(res.rows[0].value == 4.0);
  CHECK(res.rows[0].digest == res.rows[1].digest);
  REQUIRE(res.configs.size() == 1);
  CHECK(res.configs[0].first == res.rows[0].digest);
  CHECK(res.configs[0].second.at("sweep.values") == "4,6");
  CHECK_THROWS_AS(run_sweep(cfg, SweepVariable::GateTime, {}), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(cfg, SweepVariable::GateTime, {6.0, 4.0}), std::invalid_argument);
}

TEST_CASE("per-point failures are recorded and the sweep continues") {
  ExperimentConfig cfg = quick_config();
  cfg.pulse.samples = 256;
  // The second gate time makes the step phase exceed the limit.
  const SweepResult res = run_sweep(cfg, SweepVariable::GateTime, {6.0, 400.0});
  CHECK(res.rows.size() == 1);
  REQUIRE(res.failures.size() == 1);
  CHECK(res.failures[0].find("400") != std::string::npos);
}

TEST_CASE("CSV and JSON serialization are stable") {
  ExperimentConfig cfg = quick_config();
  const SweepResult res = run_sweep(cfg, SweepVariable::GateTime, {4.0, 6.0});
  const std::string csv = res.to_csv();
  CHECK(csv.rfind("sweep_variable,value,mean_error,sem_error,mean_leakage,runs,seed,config_digest\n",
                  0) == 0);
  CHECK(csv == run_sweep(cfg, SweepVariable::GateTime, {4.0, 6.0}).to_csv());
  const std::string json = res.to_json();
  CHECK(json.find("\"config_digest\"") != std::string::npos);
  CHECK(json.find("\"gate.name\": \"move\"") != std::string::npos);
}

TEST_CASE("digest distinguishes configs") {
  ExperimentConfig a = quick_config();
  ExperimentConfig b = quick_config();
  b.noise.mode = NoiseMode::Dc;
  b.noise.sigma_f = 0.15;
  CHECK(config_digest(a.resolved()) != config_digest(b.resolved()));
  CHECK(config_digest(a.resolved()) == config_digest(quick_config().resolved()));
}

TEST_CASE("unit rescaling leaves errors invariant to 1e-9") {
  ExperimentConfig ns = quick_config();
  ns.gate = get_gate("cnot1");
  ns.pulse.gate_time = 8.0;
  ns.noise.mode = NoiseMode::Filtered;
  ns.noise.sigma_f = 0.15;
  ns.noise.bandwidth = 0.4;
  ns.runs = 3;
  ExperimentConfig us = ns;  // ns -> us, GHz -> MHz
  us.pulse.gate_time = ns.pulse.gate_time * 1000.0;
  us.pulse.gap = ns.pulse.gap / 1000.0;
  us.noise.bandwidth = ns.noise.bandwidth / 1000.0;
  const McPoint a = mc_estimate(ns);
  const McPoint b = mc_estimate(us);
  CHECK(std::abs(a.mean_error - b.mean_error) < 1e-9);
  CHECK(std::abs(a.mean_leakage - b.mean_leakage) < 1e-9);
}

TEST_CASE("gap-time tradeoff") {
  ExperimentConfig a = quick_config();
  a.gate = get_gate("cnot1");
  a.pulse.gap = 5.0;
  a.pulse.gate_time = 6.0;
  ExperimentConfig b = a;
  b.pulse.gap = 5.0 / 4.0;
  b.pulse.gate_time = 6.0 * 4.0;
  CHECK(std::abs(mc_estimate(a).mean_error - mc_estimate(b).mean_error) < 1e-9);
}

TEST_CASE("epsilon study fits a quadratic slope") {
  EpsilonStudy study =
      epsilon_study(get_gate("cnot1"), 1, PauliString::single(3, 2, 'Z'),
                    {1e-3, 3.16e-3, 1e-2}, [] {
                      PulseSpec p;
                      p.gap = 5.0;
                      p.gate_time = 6.0;
                      p.samples = 2048;
                      return p;
                    }(), 0);
  CHECK(study.result.rows.size() == 3);
  CHECK(study.loglog_slope == doctest::Approx(2.0).epsilon(0.15));
  for (const auto& row : study.result.rows) {
    CHECK(row.stats.mean_error > study.baseline_error);
  }
}

TEST_CASE("adiabatic error grows far more gradually with noise than the dynamic gate") {
  ExperimentConfig adiabatic;
  adiabatic.gate = get_gate("cnot1");
  adiabatic.pulse.gap = 5.0;
  adiabatic.pulse.gate_time = 10.0;
  adiabatic.noise.mode = NoiseMode::Dc;
  adiabatic.runs = 200;
  adiabatic.seed = 5;
  ExperimentConfig dynamic = adiabatic;
  dynamic.gate.reset();

  auto at_sigma = [](ExperimentConfig cfg, double s) {
    cfg.noise.sigma_f = s;
    return mc_estimate(cfg).mean_error;
  };
  const double a_lo = at_sigma(adiabatic, 0.0375);
  const double a_hi = at_sigma(adiabatic, 0.15);
  const double d_lo = at_sigma(dynamic, 0.0375);
  const double d_hi = at_sigma(dynamic, 0.15);
  // Quadratic law for the dynamic gate; the adiabatic gate sits orders of
  // magnitude below it at every amplitude.
  CHECK(d_hi / d_lo == doctest::Approx(16.0).epsilon(0.25));
  CHECK(a_hi < 1e-2 * d_hi);
  CHECK(a_lo < 1e-2 * d_lo);
}

TEST_CASE("presets are registered") {
  CHECK(preset_names() == std::vector<std::string>{"fig3a", "fig3b", "fig3c", "epsilon"});
  for (const auto& name : preset_names()) {
    const auto series = build_preset(name, 3);
    CHECK_FALSE(series.empty());
    for (const auto& s : series) CHECK_FALSE(s.values.empty());
  }
  CHECK_THROWS_AS(build_preset("fig9z", 0), std::invalid_argument);
}

TEST_CASE("dynamic baseline series recalibrate under noise") {
  ExperimentConfig dyn;
  dyn.gate.reset();
  dyn.pulse.gate_time = 12.0;
  dyn.pulse.samples = 2048;
  dyn.runs = 64;
  dyn.seed = 2;
  // Noise-free: fixed t_0 = 10 calibration shows the detuning error.
  const McPoint fixed = mc_estimate(dyn);
  CHECK(fixed.mean_error == doctest::Approx(dynamic_detuning_error(12.0, 10.0)).epsilon(1e-6));
  // DC noise: recalibrated at each gate time, so the mean follows the
  // quadratic law instead of the detuning law.
  dyn.noise.mode = NoiseMode::Dc;
  dyn.noise.sigma_f = 0.15;
  const McPoint tuned = mc_estimate(dyn);
  CHECK(tuned.mean_error < 0.05);
  CHECK(tuned.mean_error > 0.2 * dynamic_references(12, 10, 0.15).dc_error);
}
