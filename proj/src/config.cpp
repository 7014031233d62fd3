#include "pauliseq/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace pauliseq {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError("key '" + key + "': cannot parse number '" + value + "'");
  }
  return out;
}

long long parse_int(const std::string& key, const std::string& value) {
  long long out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError("key '" + key + "': cannot parse integer '" + value + "'");
  }
  return out;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "gate.name",     "gate.theta",      "pulse.shape",  "pulse.r",
      "pulse.erf_width", "pulse.gap",     "pulse.gate_time", "pulse.samples",
      "noise.mode",    "noise.sigma",     "noise.bandwidth", "mc.runs",
      "mc.seed",       "epsilon.stage",   "epsilon.extra", "sweep.variable",
      "sweep.values",  "output.path",     "output.format",
  };
  return keys;
}

}  // namespace

ConfigDocument ConfigDocument::parse_string(const std::string& text) {
  ConfigDocument doc;
  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_keys().count(key)) {
      throw ConfigError("unknown key '" + key + "' (line " + std::to_string(line_no) + ")");
    }
    if (value.empty()) {
      throw ConfigError("key '" + key + "' has an empty value (line " + std::to_string(line_no) + ")");
    }
    if (!doc.entries.emplace(key, value).second) {
      throw ConfigError("key '" + key + "' given twice (line " + std::to_string(line_no) + ")");
    }
  }
  return doc;
}

ConfigDocument ConfigDocument::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

ResolvedExperiment resolve_config(const ConfigDocument& doc) {
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    auto it = doc.entries.find(key);
    if (it == doc.entries.end()) return std::nullopt;
    return it->second;
  };

  ResolvedExperiment out;
  ExperimentConfig& cfg = out.config;

  const auto gate_name = get("gate.name");
  if (!gate_name) throw ConfigError("missing required key 'gate.name'");
  const bool rotation = *gate_name == "rz" || *gate_name == "rx" || *gate_name == "ry";
  const auto theta = get("gate.theta");
  if (rotation && !theta) throw ConfigError("key 'gate.theta' is required for gate '" + *gate_name + "'");
  if (!rotation && theta) throw ConfigError("key 'gate.theta' is not allowed for gate '" + *gate_name + "'");

  try {
    if (*gate_name == "dynamic") {
      cfg.gate.reset();
    } else if (rotation) {
      cfg.gate = get_gate(*gate_name, parse_double("gate.theta", *theta));
    } else {
      cfg.gate = get_gate(*gate_name);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("key 'gate.name': ") + e.what());
  }

  try {
    if (auto v = get("pulse.shape")) cfg.pulse.shape = parse_pulse_shape(*v);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("key 'pulse.shape': ") + e.what());
  }
  if (auto v = get("pulse.gap")) cfg.pulse.gap = parse_double("pulse.gap", *v);
  if (auto v = get("pulse.gate_time")) cfg.pulse.gate_time = parse_double("pulse.gate_time", *v);
  if (auto v = get("pulse.r")) cfg.pulse.rz_ratio = parse_double("pulse.r", *v);
  if (auto v = get("pulse.erf_width")) cfg.pulse.erf_width = parse_double("pulse.erf_width", *v);
  if (auto v = get("pulse.samples")) {
    cfg.pulse.samples = static_cast<int>(parse_int("pulse.samples", *v));
  }
  try {
    if (auto v = get("noise.mode")) cfg.noise.mode = parse_noise_mode(*v);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("key 'noise.mode': ") + e.what());
  }
  if (auto v = get("noise.sigma")) cfg.noise.sigma_f = parse_double("noise.sigma", *v);
  if (auto v = get("noise.bandwidth")) cfg.noise.bandwidth = parse_double("noise.bandwidth", *v);
  if (auto v = get("mc.runs")) cfg.runs = static_cast<int>(parse_int("mc.runs", *v));
  if (auto v = get("mc.seed")) cfg.seed = static_cast<std::uint64_t>(parse_int("mc.seed", *v));

  const auto eps_stage = get("epsilon.stage");
  const auto eps_extra = get("epsilon.extra");
  if (eps_stage.has_value() != eps_extra.has_value()) {
    throw ConfigError("epsilon.stage and epsilon.extra must be given together");
  }
  if (eps_stage) {
    if (!cfg.gate) throw ConfigError("epsilon.* keys need an adiabatic gate");
    try {
      cfg.epsilon = EpsilonPerturbation{static_cast<int>(parse_int("epsilon.stage", *eps_stage)),
                                        PauliString::parse(*eps_extra)};
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("key 'epsilon.extra': ") + e.what());
    }
  }

  const auto sweep_var = get("sweep.variable");
  const auto sweep_vals = get("sweep.values");
  if (sweep_var && !sweep_vals) throw ConfigError("key 'sweep.values' is required with 'sweep.variable'");
  if (!sweep_var && sweep_vals) throw ConfigError("key 'sweep.variable' is required with 'sweep.values'");
  if (sweep_var) {
    try {
      out.sweep_variable = parse_sweep_variable(*sweep_var);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("key 'sweep.variable': ") + e.what());
    }
    std::stringstream ss(*sweep_vals);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const std::string t = trim(tok);
      if (t.empty()) throw ConfigError("key 'sweep.values': empty entry");
      out.sweep_values.push_back(parse_double("sweep.values", t));
    }
    if (out.sweep_values.empty()) throw ConfigError("key 'sweep.values' is empty");
  }

  if (auto v = get("output.path")) out.output_path = *v;
  if (auto v = get("output.format")) {
    if (*v != "csv" && *v != "json") {
      throw ConfigError("key 'output.format': expected csv or json, got '" + *v + "'");
    }
    out.output_format = *v;
  }

  try {
    cfg.pulse.check();
    cfg.noise.check();
    if (cfg.runs < 1) throw std::invalid_argument("mc.runs must be at least 1");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return out;
}

FlatConfig ResolvedExperiment::resolved() const {
  std::optional<std::pair<SweepVariable, std::vector<double>>> sweep;
  if (sweep_variable) sweep = std::make_pair(*sweep_variable, sweep_values);
  FlatConfig flat = config.resolved(sweep);
  if (!output_path.empty()) flat["output.path"] = output_path;
  flat["output.format"] = output_format;
  return flat;
}

}  // namespace pauliseq
