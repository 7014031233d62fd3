#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pauliseq/config.hpp"
#include "pauliseq/experiments.hpp"
#include "pauliseq/gates.hpp"
#include "pauliseq/search.hpp"

namespace {

using namespace pauliseq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSequenceInvalid = 2;
constexpr int kExitNumerical = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

GateSequence load_sequence(const std::string& gate_name, std::optional<double> theta,
                           const std::string& file, GateSpec* spec_out) {
  if (!gate_name.empty()) {
    GateSpec spec = get_gate(gate_name, theta);
    if (spec_out) *spec_out = spec;
    return spec.sequence;
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot open sequence file '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sequence(ss.str());
}

int cmd_verify(const std::string& gate_name, std::optional<double> theta,
               const std::string& file) {
  GateSpec spec;
  GateSequence seq;
  try {
    seq = load_sequence(gate_name, theta, file, &spec);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cout << "sequence: " << (seq.name.empty() ? "(unnamed)" : seq.name) << " ("
            << seq.n_qubits << " qubits, " << seq.n_stages() << " stages)\n";
  if (spec.reconstructed) {
    std::cout << "warning: this sequence is a reconstruction from indirect constraints; "
                 "it is checked against the registered transformation and the "
                 "exhaustive search\n";
  }
  const ValidationReport report = validate_sequence(seq);
  std::cout << "validation: " << report.str();
  if (!report.passed) return kExitSequenceInvalid;

  if (!spec.name.empty() && spec.rotation_certificate) {
    const CertificateResult res = verify_certificate(seq, spec.rotation_certificate->claims);
    for (const auto& line : res.trace) std::cout << "  " << line << "\n";
    std::cout << "certificate: " << (res.verified ? "VERIFIED" : "REFUTED") << "\n";
    return res.verified ? kExitOk : kExitSequenceInvalid;
  }

  try {
    const LogicalTransformation t = track_clifford(seq);
    std::cout << "transformation: " << t.str() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "tracking failed: " << e.what() << "\n";
    return kExitSequenceInvalid;
  }
  return kExitOk;
}

int cmd_simulate(const std::string& config_path, const std::string& dump_trace,
                 const std::string& dump_noise) {
  ResolvedExperiment exp;
  try {
    exp = resolve_config(ConfigDocument::parse_file(config_path));
    if (exp.sweep_variable) {
      throw ConfigError("simulate expects a config without sweep.* keys (use 'sweep')");
    }
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!dump_trace.empty() || !dump_noise.empty()) {
      if (!exp.config.gate) throw std::runtime_error("trace dumps need an adiabatic gate");
      const ControlTrace trace = build_schedule(exp.config.gate->sequence, exp.config.pulse);
      NoiseSpec noise = exp.config.noise;
      noise.seed = exp.config.seed;
      const auto mult = generate_multipliers(noise, trace.grid, trace.n_stages(), 0);
      if (!dump_trace.empty()) write_file(dump_trace, apply_noise(trace, mult).to_csv());
      if (!dump_noise.empty()) {
        ControlTrace m;
        m.grid = trace.grid;
        m.strengths = mult;
        write_file(dump_noise, m.to_csv());
      }
    }
    ExperimentConfig single = exp.config;
    single.runs = 1;
    const McPoint p = mc_estimate(single);
    std::printf("error            %.12e\n", p.mean_error);
    std::printf("leakage          %.12e\n", p.mean_leakage);
    std::printf("unitarity_defect %.12e\n", p.max_unitarity_defect);
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "simulation failed: " << e.what() << "\n";
    return kExitNumerical;
  }
}

void print_summary(const SweepResult& result) {
  std::printf("%-12s %-12s %-13s %-13s %-13s %-6s %s\n", "variable", "value", "mean_error",
              "sem", "leakage", "runs", "digest");
  for (const auto& r : result.rows) {
    std::printf("%-12s %-12g %-13.4e %-13.4e %-13.4e %-6d %s\n", r.variable.c_str(), r.value,
                r.stats.mean_error, r.stats.sem_error, r.stats.mean_leakage, r.stats.runs,
                r.digest.c_str());
  }
  for (const auto& f : result.failures) std::fprintf(stderr, "point failed: %s\n", f.c_str());
}

int write_sweep_output(const SweepResult& result, const std::string& path,
                       const std::string& format) {
  if (!path.empty()) {
    const bool json = format == "json" || (format.empty() && path.ends_with(".json"));
    write_file(path, json ? result.to_json() : result.to_csv());
    std::cout << "wrote " << path << "\n";
  }
  print_summary(result);
  return result.failures.empty() ? kExitOk : kExitNumerical;
}

int cmd_sweep(const std::string& config_path, const std::string& preset,
              std::optional<std::uint64_t> seed, const std::string& out_path) {
  try {
    if (!preset.empty()) {
      const SweepResult result = run_preset(preset, seed.value_or(0));
      return write_sweep_output(result, out_path, "");
    }
    ResolvedExperiment exp = resolve_config(ConfigDocument::parse_file(config_path));
    if (!exp.sweep_variable) throw ConfigError("missing sweep.variable / sweep.values");
    if (seed) exp.config.seed = *seed;
    const std::string path = out_path.empty() ? exp.output_path : out_path;
    const SweepResult result =
        run_sweep(exp.config, *exp.sweep_variable, exp.sweep_values);
    return write_sweep_output(result, path, out_path.empty() ? exp.output_format : "");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "sweep failed: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic Pauli-sequence gate verifier and simulator"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Check a sequence and print its logical gate");
  std::string v_gate, v_file;
  double v_theta = 0.0;
  bool v_has_theta = false;
  verify->add_option("--gate", v_gate, "registered gate name");
  auto* theta_opt = verify->add_option("--theta", v_theta, "angle for rz/rx/ry");
  verify->add_option("--file", v_file, "sequence description file");
  verify->callback([&] { v_has_theta = theta_opt->count() > 0; });

  auto* simulate = app.add_subcommand("simulate", "Run a single noisy or noise-free evolution");
  std::string s_config, s_dump_trace, s_dump_noise;
  simulate->add_option("--config", s_config, "config file")->required();
  simulate->add_option("--dump-trace", s_dump_trace, "write the noisy control trace CSV");
  simulate->add_option("--dump-noise", s_dump_noise, "write the noise multipliers CSV");

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo parameter sweep");
  std::string w_config, w_preset, w_out;
  std::uint64_t w_seed = 0;
  bool w_has_seed = false;
  sweep->add_option("--config", w_config, "config file with sweep.* keys");
  sweep->add_option("--preset", w_preset, "fig3a | fig3b | fig3c | epsilon");
  auto* seed_opt = sweep->add_option("--seed", w_seed, "override the seed");
  sweep->add_option("--out", w_out, "output file (.csv or .json)");
  sweep->callback([&] { w_has_seed = seed_opt->count() > 0; });

  auto* list = app.add_subcommand("list-gates", "List the registered gates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  if (verify->parsed()) {
    if (v_gate.empty() == v_file.empty()) {
      std::cerr << "verify needs exactly one of --gate or --file\n";
      return kExitUsage;
    }
    return cmd_verify(v_gate, v_has_theta ? std::optional<double>(v_theta) : std::nullopt, v_file);
  }
  if (simulate->parsed()) return cmd_simulate(s_config, s_dump_trace, s_dump_noise);
  if (sweep->parsed()) {
    if (w_config.empty() == w_preset.empty()) {
      std::cerr << "sweep needs exactly one of --config or --preset\n";
      return kExitUsage;
    }
    return cmd_sweep(w_config, w_preset,
                     w_has_seed ? std::optional<std::uint64_t>(w_seed) : std::nullopt, w_out);
  }
  if (list->parsed()) {
    std::cout << list_gates();
    return kExitOk;
  }
  return kExitUsage;
}
