#include "pauliseq/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace pauliseq {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void parallel_for(int count, const std::function<void(int)>& body) {
  const int threads = std::min(mc_thread_count(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count && !failed; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

int mc_thread_count() {
  if (const char* env = std::getenv("PAULISEQ_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string config_digest(const FlatConfig& cfg) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto eat = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001B3ULL;
    }
  };
  for (const auto& [k, v] : cfg) {
    eat(k);
    eat("=");
    eat(v);
    eat("\n");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SweepVariable parse_sweep_variable(const std::string& s) {
  if (s == "gate_time") return SweepVariable::GateTime;
  if (s == "sigma_f") return SweepVariable::SigmaF;
  if (s == "bandwidth") return SweepVariable::Bandwidth;
  if (s == "epsilon") return SweepVariable::Epsilon;
  throw std::invalid_argument("unknown sweep variable '" + s + "'");
}

std::string sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::GateTime: return "gate_time";
    case SweepVariable::SigmaF: return "sigma_f";
    case SweepVariable::Bandwidth: return "bandwidth";
    case SweepVariable::Epsilon: return "epsilon";
  }
  return "?";
}

std::string ExperimentConfig::gate_name() const {
  return gate ? gate->name : std::string("dynamic");
}

void ExperimentConfig::check() const {
  pulse.check();
  noise.check();
  if (runs < 1) throw std::invalid_argument("mc.runs must be at least 1");
}

FlatConfig ExperimentConfig::resolved(
    const std::optional<std::pair<SweepVariable, std::vector<double>>>& sweep) const {
  FlatConfig out;
  out["gate.name"] = gate_name();
  if (gate && gate->theta) out["gate.theta"] = fmt_double(*gate->theta);
  out["pulse.shape"] = pulse_shape_name(pulse.shape);
  out["pulse.gap"] = fmt_double(pulse.gap);
  out["pulse.gate_time"] = fmt_double(pulse.gate_time);
  out["pulse.r"] = fmt_double(pulse.rz_ratio);
  out["pulse.erf_width"] = fmt_double(pulse.erf_width);
  out["pulse.samples"] = std::to_string(pulse.samples);
  out["noise.mode"] = noise_mode_name(noise.mode);
  out["noise.sigma"] = fmt_double(noise.sigma_f);
  out["noise.bandwidth"] = fmt_double(noise.bandwidth);
  out["mc.runs"] = std::to_string(runs);
  out["mc.seed"] = std::to_string(seed);
  if (epsilon) {
    out["epsilon.stage"] = std::to_string(epsilon->stage_index);
    out["epsilon.extra"] = epsilon->extra.str();
  }
  if (sweep) {
    out["sweep.variable"] = sweep_variable_name(sweep->first);
    std::string vals;
    for (std::size_t i = 0; i < sweep->second.size(); ++i) {
      if (i) vals += ",";
      vals += fmt_double(sweep->second[i]);
    }
    out["sweep.values"] = vals;
  }
  return out;
}

GateContext make_context(const GateSpec& spec) {
  GateContext ctx;
  ctx.stage_ops = stage_operators(spec.sequence);
  ctx.in_basis = ground_basis(spec.sequence.stages.front(), spec.sequence.data_in,
                              spec.sequence.n_qubits);
  ctx.out_basis = ground_basis(spec.sequence.stages.back(), spec.sequence.data_out,
                               spec.sequence.n_qubits);
  if (spec.clifford_ideal) {
    ctx.u_ideal = ideal_unitary(*spec.clifford_ideal);
  } else if (spec.rotation_certificate) {
    ctx.u_ideal = spec.rotation_certificate->logical_unitary;
  } else {
    throw std::invalid_argument("gate '" + spec.name + "' carries no ideal");
  }
  return ctx;
}

namespace {

McPoint reduce_runs(const std::vector<GateErrorReport>& reports,
                    const std::vector<double>& defects) {
  McPoint p;
  p.runs = static_cast<int>(reports.size());
  double sum = 0.0, sum_leak = 0.0;
  for (const auto& r : reports) {
    sum += r.error;
    sum_leak += r.leakage;
  }
  p.mean_error = sum / p.runs;
  p.mean_leakage = sum_leak / p.runs;
  double ss = 0.0;
  for (const auto& r : reports) {
    const double d = r.error - p.mean_error;
    ss += d * d;
  }
  p.sem_error = p.runs > 1 ? std::sqrt(ss / (p.runs - 1)) / std::sqrt(double(p.runs)) : 0.0;
  p.max_unitarity_defect = defects.empty() ? 0.0 : *std::max_element(defects.begin(), defects.end());
  return p;
}

}  // namespace

McPoint mc_estimate(const ExperimentConfig& cfg) {
  cfg.check();
  const bool noise_free = cfg.noise.mode == NoiseMode::None || cfg.noise.sigma_f == 0.0;
  const int runs = noise_free ? 1 : cfg.runs;
  NoiseSpec noise = cfg.noise;
  noise.seed = cfg.seed;

  std::vector<GateErrorReport> reports(runs);
  std::vector<double> defects(runs, 0.0);

  if (cfg.gate) {
    const GateContext ctx = make_context(*cfg.gate);
    const ControlTrace trace = build_schedule(cfg.gate->sequence, cfg.pulse);
    parallel_for(runs, [&](int r) {
      const auto mult = generate_multipliers(noise, trace.grid, trace.n_stages(), r);
      const ControlTrace noisy = apply_noise(trace, mult);
      const EvolutionResult res = evolve(ctx.stage_ops, noisy);
      reports[r] = gate_error(res.u_sim, ctx.in_basis, ctx.out_basis, ctx.u_ideal);
      defects[r] = res.unitarity_defect;
    });
  } else {
    // Dynamic baseline. Noise-free series keep the t_0 calibration fixed so
    // detuning shows; noisy series re-tune the amplitude at each gate time.
    const double t_g = cfg.pulse.gate_time;
    const double t_cal = cfg.noise.mode == NoiseMode::None ? cfg.dynamic_t0 : t_g;
    const DynamicSpec spec = calibrate(t_cal, cfg.envelope, cfg.pulse, cfg.pulse.samples);
    parallel_for(runs, [&](int r) {
      reports[r] = simulate_dynamic(spec, t_g, noise, r);
    });
  }
  return reduce_runs(reports, defects);
}

ExperimentConfig at_point(const ExperimentConfig& cfg, SweepVariable variable, double value) {
  ExperimentConfig point = cfg;
  switch (variable) {
    case SweepVariable::GateTime:
      point.pulse.gate_time = value;
      break;
    case SweepVariable::SigmaF:
      point.noise.sigma_f = value;
      break;
    case SweepVariable::Bandwidth:
      point.noise.bandwidth = value;
      break;
    case SweepVariable::Epsilon: {
      if (!cfg.gate) throw std::invalid_argument("epsilon sweep needs an adiabatic gate");
      const EpsilonPerturbation pert =
          cfg.epsilon.value_or(EpsilonPerturbation{1, PauliString::single(3, 2, 'Z')});
      point.gate = perturb_stage(*cfg.gate, pert.stage_index, pert.extra, value);
      break;
    }
  }
  return point;
}

SweepResult run_sweep(const ExperimentConfig& cfg, SweepVariable variable,
                      const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("sweep.values is empty");
  if (std::adjacent_find(values.begin(), values.end(),
                         [](double a, double b) { return a >= b; }) != values.end()) {
    throw std::invalid_argument("sweep.values must be strictly increasing");
  }
  SweepResult result;
  const FlatConfig resolved = cfg.resolved(std::make_pair(variable, values));
  const std::string digest = config_digest(resolved);
  result.configs.emplace_back(digest, resolved);
  for (double value : values) {
    try {
      const McPoint stats = mc_estimate(at_point(cfg, variable, value));
      result.rows.push_back(
          {sweep_variable_name(variable), value, stats, cfg.seed, digest});
    } catch (const std::exception& e) {
      result.failures.push_back(sweep_variable_name(variable) + "=" + fmt_double(value) +
                                ": " + e.what());
    }
  }
  return result;
}

void SweepResult::append(const SweepResult& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  for (const auto& kv : other.configs) {
    if (std::none_of(configs.begin(), configs.end(),
                     [&](const auto& c) { return c.first == kv.first; })) {
      configs.push_back(kv);
    }
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string SweepResult::to_csv() const {
  std::string out = "sweep_variable,value,mean_error,sem_error,mean_leakage,runs,seed,config_digest\n";
  for (const auto& r : rows) {
    out += r.variable + "," + fmt_double(r.value) + "," + fmt_double(r.stats.mean_error) + "," +
           fmt_double(r.stats.sem_error) + "," + fmt_double(r.stats.mean_leakage) + "," +
           std::to_string(r.stats.runs) + "," + std::to_string(r.seed) + "," + r.digest + "\n";
  }
  return out;
}

std::string SweepResult::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = "pauliseq-sweep-1";
  doc["series"] = nlohmann::ordered_json::array();
  for (const auto& [digest, cfg] : configs) {
    nlohmann::ordered_json series;
    series["config_digest"] = digest;
    series["config"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : cfg) series["config"][k] = v;
    series["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      if (r.digest != digest) continue;
      nlohmann::ordered_json row;
      row["sweep_variable"] = r.variable;
      row["value"] = r.value;
      row["mean_error"] = r.stats.mean_error;
      row["sem_error"] = r.stats.sem_error;
      row["mean_leakage"] = r.stats.mean_leakage;
      row["runs"] = r.stats.runs;
      row["seed"] = r.seed;
      series["rows"].push_back(row);
    }
    doc["series"].push_back(series);
  }
  if (!failures.empty()) doc["failures"] = failures;
  return doc.dump(2) + "\n";
}

EpsilonStudy epsilon_study(const GateSpec& gate, int stage_index, const PauliString& extra,
                           const std::vector<double>& eps_values, const PulseSpec& pulse,
                           std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.gate = gate;
  cfg.pulse = pulse;
  cfg.noise.mode = NoiseMode::None;
  cfg.runs = 1;
  cfg.seed = seed;
  cfg.epsilon = EpsilonPerturbation{stage_index, extra};

  EpsilonStudy study;
  study.baseline_error = mc_estimate(cfg).mean_error;
  study.result = run_sweep(cfg, SweepVariable::Epsilon, eps_values);

  // Log-log fit of (error - baseline) vs eps; the baseline is the
  // unperturbed adiabatic floor, not part of the eps scaling.
  std::vector<double> xs, ys;
  for (const auto& r : study.result.rows) {
    const double excess = r.stats.mean_error - study.baseline_error;
    if (r.value > 0 && excess > 0) {
      xs.push_back(std::log(r.value));
      ys.push_back(std::log(excess));
    }
  }
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      num += (xs[i] - mx) * (ys[i] - my);
      den += (xs[i] - mx) * (xs[i] - mx);
    }
    study.loglog_slope = num / den;
  }
  return study;
}

namespace {

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

ExperimentConfig base_config(std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.pulse.gap = 5.0;
  cfg.pulse.gate_time = 10.0;
  cfg.pulse.rz_ratio = 0.052;
  cfg.pulse.samples = 4096;
  cfg.runs = 1000;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

std::vector<std::string> preset_names() { return {"fig3a", "fig3b", "fig3c", "epsilon"}; }

std::vector<PresetSeries> build_preset(const std::string& name, std::uint64_t seed) {
  std::vector<PresetSeries> out;
  const GateSpec cnot1 = get_gate("cnot1");

  if (name == "fig3a") {
    const std::vector<double> times{4, 6, 8, 10, 12, 14, 16};
    ExperimentConfig adiabatic = base_config(seed);
    adiabatic.gate = cnot1;
    out.push_back({"cnot1-nofree", adiabatic, SweepVariable::GateTime, times});
    ExperimentConfig noisy = adiabatic;
    noisy.noise.mode = NoiseMode::Dc;
    noisy.noise.sigma_f = 0.15;
    out.push_back({"cnot1-dc15", noisy, SweepVariable::GateTime, times});
    ExperimentConfig dyn = base_config(seed);
    dyn.gate.reset();
    out.push_back({"dynamic-fixed", dyn, SweepVariable::GateTime, times});
    ExperimentConfig dyn_noisy = dyn;
    dyn_noisy.noise.mode = NoiseMode::Dc;
    dyn_noisy.noise.sigma_f = 0.15;
    out.push_back({"dynamic-dc15", dyn_noisy, SweepVariable::GateTime, times});
    return out;
  }
  if (name == "fig3b") {
    const std::vector<double> sigmas{0, 0.0375, 0.075, 0.15};
    ExperimentConfig dc = base_config(seed);
    dc.gate = cnot1;
    dc.noise.mode = NoiseMode::Dc;
    out.push_back({"cnot1-dc", dc, SweepVariable::SigmaF, sigmas});
    for (double b : {0.2, 0.4}) {
      ExperimentConfig f = dc;
      f.noise.mode = NoiseMode::Filtered;
      f.noise.bandwidth = b;
      out.push_back({"cnot1-b" + short_num(b), f, SweepVariable::SigmaF, sigmas});
    }
    ExperimentConfig dyn = base_config(seed);
    dyn.gate.reset();
    dyn.noise.mode = NoiseMode::Dc;
    out.push_back({"dynamic-dc", dyn, SweepVariable::SigmaF, sigmas});
    return out;
  }
  if (name == "fig3c") {
    const std::vector<double> bands{0.1, 0.2, 0.4, 0.8, 1.2, 1.6};
    for (double s : {0.0375, 0.075, 0.15}) {
      ExperimentConfig f = base_config(seed);
      f.gate = cnot1;
      f.noise.mode = NoiseMode::Filtered;
      f.noise.sigma_f = s;
      out.push_back({"cnot1-s" + short_num(s), f, SweepVariable::Bandwidth, bands});
    }
    ExperimentConfig dyn = base_config(seed);
    dyn.gate.reset();
    dyn.noise.mode = NoiseMode::Filtered;
    dyn.noise.sigma_f = 0.15;
    out.push_back({"dynamic-s0.15", dyn, SweepVariable::Bandwidth, bands});
    return out;
  }
  if (name == "epsilon") {
    const std::vector<double> eps{1e-4, 3.1622776601683794e-4, 1e-3, 3.1622776601683794e-3, 1e-2};
    ExperimentConfig p1 = base_config(seed);
    p1.gate = cnot1;
    p1.noise.mode = NoiseMode::None;
    p1.runs = 1;
    p1.epsilon = EpsilonPerturbation{1, PauliString::single(3, 2, 'Z')};
    out.push_back({"cnot1-P1-Z2", p1, SweepVariable::Epsilon, eps});
    ExperimentConfig p3 = p1;
    p3.epsilon = EpsilonPerturbation{3, PauliString("IYY")};
    out.push_back({"cnot1-P3-Y2Y3", p3, SweepVariable::Epsilon, eps});
    return out;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

SweepResult run_preset(const std::string& name, std::uint64_t seed) {
  SweepResult combined;
  for (const auto& series : build_preset(name, seed)) {
    combined.append(run_sweep(series.config, series.variable, series.values));
  }
  return combined;
}

}  // namespace pauliseq
