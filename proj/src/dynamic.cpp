#include "pauliseq/dynamic.hpp"

#include <cmath>
#include <numbers>

namespace pauliseq {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix zz_matrix() { return matrix_of(PauliString("ZZ")); }

Matrix ideal_zz_gate() {
  // exp(+i pi/4 ZZ): what -(a/2) ZZ integrates to at phase pi/4.
  Matrix zz = zz_matrix();
  Matrix u = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    u(i, i) = std::exp(complexd(0.0, kPi / 4.0 * zz(i, i).real()));
  }
  return u;
}

}  // namespace

std::vector<double> dynamic_envelope(const DynamicSpec& spec, const std::vector<double>& grid,
                                     double t_g) {
  std::vector<double> env(grid.size(), 1.0);
  if (spec.envelope == DynamicEnvelope::Square) return env;
  PulseSpec shape = spec.pulse;
  shape.gate_time = t_g;
  shape.samples = std::max<int>(256, static_cast<int>(grid.size()));
  const double half = t_g / 2.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid[k];
    if (t <= half) {
      env[k] = std::sin(leg_theta(shape, half, t - half / 2.0));
    } else {
      env[k] = std::cos(leg_theta(shape, half, (t - half) - half / 2.0));
    }
  }
  return env;
}

double accumulated_phase(const DynamicSpec& spec, double t_g) {
  std::vector<double> grid(spec.samples);
  for (int k = 0; k < spec.samples; ++k) grid[k] = t_g * k / (spec.samples - 1);
  const std::vector<double> env = dynamic_envelope(spec, grid, t_g);
  double integral = 0.0;
  for (int k = 0; k + 1 < spec.samples; ++k) {
    integral += 0.5 * (env[k] + env[k + 1]) * (grid[k + 1] - grid[k]);
  }
  return 0.5 * spec.amplitude * integral;
}

DynamicSpec calibrate(double t_0, DynamicEnvelope envelope, const PulseSpec& pulse,
                      int samples) {
  if (t_0 <= 0) throw std::invalid_argument("calibrate: t_0 must be positive");
  DynamicSpec spec;
  spec.t_0 = t_0;
  spec.envelope = envelope;
  spec.pulse = pulse;
  spec.samples = samples;

  const double target = kPi / 4.0;
  double lo = 0.0;
  double hi = kPi / t_0;  // twice the square-pulse answer
  spec.amplitude = hi;
  while (accumulated_phase(spec, t_0) < target) {
    hi *= 2.0;
    spec.amplitude = hi;
    if (hi > 1e6) throw std::runtime_error("calibrate: cannot bracket the target phase");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    spec.amplitude = mid;
    const double phase = accumulated_phase(spec, t_0);
    if (std::abs(phase - target) < 1e-10 * target) break;
    (phase < target ? lo : hi) = mid;
  }
  return spec;
}

GateErrorReport simulate_dynamic(const DynamicSpec& spec, double t_g, const NoiseSpec& noise,
                                 std::uint64_t run_index) {
  ControlTrace trace;
  trace.grid.resize(spec.samples);
  for (int k = 0; k < spec.samples; ++k) trace.grid[k] = t_g * k / (spec.samples - 1);
  trace.strengths.assign(1, dynamic_envelope(spec, trace.grid, t_g));
  for (double& v : trace.strengths[0]) v *= spec.amplitude;

  NoiseSpec line_noise = noise;
  line_noise.check();
  const auto multipliers = generate_multipliers(line_noise, trace.grid, 1, run_index);
  const ControlTrace noisy = apply_noise(trace, multipliers);

  EvolveOptions options;
  options.frequency_to_angular = 1.0;  // amplitudes are already angular
  const EvolutionResult res = evolve({zz_matrix()}, noisy, options);

  const Matrix basis = Matrix::Identity(4, 4);
  GateErrorReport rep = gate_error(res.u_sim, basis, basis, ideal_zz_gate());
  return rep;
}

}  // namespace pauliseq
