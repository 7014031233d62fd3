#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pauliseq/dynamic.hpp"
#include "pauliseq/gates.hpp"
#include "pauliseq/metrics.hpp"
#include "pauliseq/noise.hpp"
#include "pauliseq/propagator.hpp"
#include "pauliseq/schedule.hpp"

namespace pauliseq {

/// Canonical flat key/value form of a fully-resolved experiment, used for
/// digests and the JSON mirror.
using FlatConfig = std::map<std::string, std::string>;

/// FNV-1a over "key=value\n" in key order, rendered as 16 hex digits.
std::string config_digest(const FlatConfig& cfg);

enum class SweepVariable { GateTime, SigmaF, Bandwidth, Epsilon };

SweepVariable parse_sweep_variable(const std::string& s);
std::string sweep_variable_name(SweepVariable v);

struct EpsilonPerturbation {
  int stage_index = 1;  // 1-based
  PauliString extra;
};

/// One experiment series: an adiabatic gate or the dynamic baseline, a pulse,
/// a noise model, and Monte Carlo settings.
struct ExperimentConfig {
  std::optional<GateSpec> gate;  // empty means the dynamic ZZ baseline
  double dynamic_t0 = 10.0;
  DynamicEnvelope envelope = DynamicEnvelope::Square;
  PulseSpec pulse;
  NoiseSpec noise;
  int runs = 1000;
  std::uint64_t seed = 0;
  std::optional<EpsilonPerturbation> epsilon;  // for epsilon sweeps
  std::string gate_name() const;

  void check() const;
  FlatConfig resolved(const std::optional<std::pair<SweepVariable, std::vector<double>>>& sweep =
                          std::nullopt) const;
};

struct McPoint {
  double mean_error = 0.0;
  double sem_error = 0.0;
  double mean_leakage = 0.0;
  double max_unitarity_defect = 0.0;
  int runs = 0;
};

struct SweepRow {
  std::string variable;
  double value = 0.0;
  McPoint stats;
  std::uint64_t seed = 0;
  std::string digest;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// digest -> resolved config, in first-seen order.
  std::vector<std::pair<std::string, FlatConfig>> configs;
  std::vector<std::string> failures;  // per-point failure notes

  std::string to_csv() const;
  std::string to_json() const;
  void append(const SweepResult& other);
};

/// Monte Carlo estimate at one point. run_index goes 0..runs-1; the noise
/// substream is a pure function of (seed, run_index, line). Noise-free
/// configs collapse to a single run. Aggregation is a fixed-order sum, so
/// the result is independent of internal parallelism.
McPoint mc_estimate(const ExperimentConfig& cfg);

/// Applies `variable = value` to a copy of the config (gate_time, sigma_f,
/// bandwidth, or epsilon via perturb_stage).
ExperimentConfig at_point(const ExperimentConfig& cfg, SweepVariable variable, double value);

/// One mc_estimate row per sweep value. Per-point failures are recorded and
/// the sweep continues.
SweepResult run_sweep(const ExperimentConfig& cfg, SweepVariable variable,
                      const std::vector<double>& values);

/// Noise-free error vs epsilon for a perturbed stage, plus the fitted
/// log-log slope (detrended by the eps = 0 baseline).
struct EpsilonStudy {
  SweepResult result;
  double loglog_slope = 0.0;
  double baseline_error = 0.0;
};
EpsilonStudy epsilon_study(const GateSpec& gate, int stage_index, const PauliString& extra,
                           const std::vector<double>& eps_values, const PulseSpec& pulse,
                           std::uint64_t seed);

/// Canned sweep presets (fig3a, fig3b, fig3c, epsilon): lists of labelled
/// series reproducing the standard plots.
struct PresetSeries {
  std::string label;
  ExperimentConfig config;
  SweepVariable variable;
  std::vector<double> values;
};
std::vector<PresetSeries> build_preset(const std::string& name, std::uint64_t seed);
std::vector<std::string> preset_names();
SweepResult run_preset(const std::string& name, std::uint64_t seed);

/// Per-gate simulation context shared by every run at a sweep point.
struct GateContext {
  std::vector<Matrix> stage_ops;
  Matrix in_basis;
  Matrix out_basis;
  Matrix u_ideal;
};
GateContext make_context(const GateSpec& spec);

/// Number of worker threads for Monte Carlo runs (PAULISEQ_THREADS overrides
/// the hardware default).
int mc_thread_count();

}  // namespace pauliseq
