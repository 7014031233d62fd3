#include "pauliseq/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace pauliseq {

namespace {

constexpr double kPi = std::numbers::pi;

/// Gudermannian, the integral of sech.
double gd(double x) { return 2.0 * std::atan(std::tanh(x / 2.0)); }

/// Endpoint deficit of the raw profile: how much of the 0..pi/2 span the
/// truncated pulse is missing before normalization.
double truncation_deficit(const PulseSpec& pulse, double leg_duration) {
  if (pulse.shape == PulseShape::RosenZener) {
    const double tau = pulse.rz_ratio * pulse.gate_time;
    return 1.0 - gd(kPi * leg_duration / (2.0 * tau)) / (kPi / 2.0);
  }
  const double w = pulse.erf_width > 0 ? pulse.erf_width : leg_duration / 6.0;
  return 1.0 - std::erf(leg_duration / (2.0 * std::sqrt(2.0) * w));
}

}  // namespace

PulseShape parse_pulse_shape(const std::string& s) {
  if (s == "rosen_zener") return PulseShape::RosenZener;
  if (s == "erf") return PulseShape::Erf;
  throw std::invalid_argument("unknown pulse shape '" + s + "'");
}

std::string pulse_shape_name(PulseShape s) {
  return s == PulseShape::RosenZener ? "rosen_zener" : "erf";
}

void PulseSpec::check() const {
  if (gap <= 0) throw std::invalid_argument("pulse.gap must be positive");
  if (gate_time <= 0) throw std::invalid_argument("pulse.gate_time must be positive");
  if (samples < 256) throw std::invalid_argument("pulse.samples must be at least 256");
  if (rz_ratio <= 0 || rz_ratio >= 0.5) {
    throw std::invalid_argument("pulse.r must lie in (0, 0.5)");
  }
  if (erf_width < 0) throw std::invalid_argument("pulse.erf_width must be nonnegative");
}

double leg_theta(const PulseSpec& pulse, double leg_duration, double s) {
  if (pulse.shape == PulseShape::RosenZener) {
    const double tau = pulse.rz_ratio * pulse.gate_time;
    const double half = gd(kPi * leg_duration / (2.0 * tau));
    return (kPi / 2.0) * (gd(kPi * s / tau) + half) / (2.0 * half);
  }
  const double w = pulse.erf_width > 0 ? pulse.erf_width : leg_duration / 6.0;
  const double half = std::erf(leg_duration / (2.0 * std::sqrt(2.0) * w));
  return (kPi / 2.0) * (std::erf(s / (std::sqrt(2.0) * w)) + half) / (2.0 * half);
}

ControlTrace build_schedule(int n_stages, const PulseSpec& pulse) {
  pulse.check();
  if (n_stages < 2) throw std::invalid_argument("schedule needs at least 2 stages");
  const int legs = n_stages - 1;
  const double t_leg = pulse.gate_time / legs;
  if (pulse.shape == PulseShape::RosenZener) {
    const double tau = pulse.rz_ratio * pulse.gate_time;
    if (tau > t_leg / 2.0) {
      throw std::invalid_argument("leg too short: Rosen-Zener constant tau=" +
                                  std::to_string(tau) + " exceeds half the leg duration " +
                                  std::to_string(t_leg / 2.0));
    }
  }

  ControlTrace trace;
  const int n = pulse.samples;
  trace.grid.resize(n);
  trace.strengths.assign(n_stages, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    const double t = pulse.gate_time * k / (n - 1);
    trace.grid[k] = t;
    int leg = std::min(static_cast<int>(t / t_leg), legs - 1);
    const double s = t - leg * t_leg - t_leg / 2.0;
    const double theta = leg_theta(pulse, t_leg, std::clamp(s, -t_leg / 2.0, t_leg / 2.0));
    trace.strengths[leg][k] = pulse.gap * std::cos(theta);
    trace.strengths[leg + 1][k] = pulse.gap * std::sin(theta);
  }

  const double deficit = truncation_deficit(pulse, t_leg);
  if (deficit > 1e-2) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "pulse truncation: raw profile misses %.3g of its span per leg end; "
                  "endpoint normalization is stretching a clipped pulse",
                  deficit);
    trace.warnings.emplace_back(buf);
  }
  return trace;
}

ControlTrace build_schedule(const GateSequence& seq, const PulseSpec& pulse) {
  return build_schedule(seq.n_stages(), pulse);
}

ControlTrace ControlTrace::refined() const {
  ControlTrace fine;
  fine.warnings = warnings;
  const int n = n_samples();
  if (n < 2) return *this;
  fine.grid.resize(2 * n - 1);
  fine.strengths.assign(n_stages(), std::vector<double>(2 * n - 1, 0.0));
  for (int k = 0; k < n; ++k) {
    fine.grid[2 * k] = grid[k];
    if (k + 1 < n) fine.grid[2 * k + 1] = 0.5 * (grid[k] + grid[k + 1]);
    for (int s = 0; s < n_stages(); ++s) {
      fine.strengths[s][2 * k] = strengths[s][k];
      if (k + 1 < n) {
        fine.strengths[s][2 * k + 1] = 0.5 * (strengths[s][k] + strengths[s][k + 1]);
      }
    }
  }
  return fine;
}

std::string ControlTrace::to_csv() const {
  std::string out = "t";
  for (int s = 0; s < n_stages(); ++s) out += ",g_" + std::to_string(s + 1);
  out += "\n";
  char buf[64];
  for (int k = 0; k < n_samples(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", grid[k]);
    out += buf;
    for (int s = 0; s < n_stages(); ++s) {
      std::snprintf(buf, sizeof buf, ",%.17g", strengths[s][k]);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

double dtheta_max(const PulseSpec& pulse, int n_stages) {
  pulse.check();
  const double t_leg = pulse.gate_time / (n_stages - 1);
  const int n = pulse.samples;
  std::vector<double> theta(n);
  for (int k = 0; k < n; ++k) {
    const double s = -t_leg / 2.0 + t_leg * k / (n - 1);
    theta[k] = leg_theta(pulse, t_leg, s);
  }
  const double dt = t_leg / (n - 1);
  double peak = 0.0;
  for (int k = 1; k + 1 < n; ++k) {
    peak = std::max(peak, std::abs(theta[k + 1] - theta[k - 1]) / (2.0 * dt));
  }
  return peak;
}

}  // namespace pauliseq
