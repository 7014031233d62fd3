#pragma once

#include <string>
#include <vector>

#include "pauliseq/sequence.hpp"

namespace pauliseq {

enum class PulseShape { RosenZener, Erf };

PulseShape parse_pulse_shape(const std::string& s);
std::string pulse_shape_name(PulseShape s);

/// Control-envelope parameters. Strengths are quoted ordinary frequencies
/// (GHz when time is ns); the propagator applies the 2*pi conversion.
struct PulseSpec {
  PulseShape shape = PulseShape::RosenZener;
  double gap = 5.0;        // full pulse strength g
  double gate_time = 10.0; // t_g
  double rz_ratio = 0.052; // r = tau / t_g (Rosen-Zener time constant ratio)
  double erf_width = 0.0;  // erf shape only; 0 means the default T/6
  int samples = 4096;      // N

  void check() const;
};

/// Sampled per-stage strengths g_i(t_k) on a uniform grid over [0, t_g].
/// At any sample at most two stages are nonzero and they are consecutive;
/// leg k crossfades stage k into stage k+1 as g*cos(theta), g*sin(theta).
struct ControlTrace {
  std::vector<double> grid;                  // N times, t_0 = 0 .. t_{N-1} = t_g
  std::vector<std::vector<double>> strengths;  // [stage][sample]
  std::vector<std::string> warnings;         // e.g. truncation warnings

  int n_samples() const { return static_cast<int>(grid.size()); }
  int n_stages() const { return static_cast<int>(strengths.size()); }
  double dt() const { return grid.size() > 1 ? grid[1] - grid[0] : 0.0; }

  /// Midpoint refinement: 2N-1 samples on the same span, strengths linearly
  /// interpolated (used by converge on a fixed noise realization).
  ControlTrace refined() const;

  /// CSV dump: header "t,g_1,..,g_S", one row per sample.
  std::string to_csv() const;
};

/// Mixing angle theta(s) for one leg, s in [-T/2, T/2], normalized to hit 0
/// and pi/2 exactly at the leg ends.
double leg_theta(const PulseSpec& pulse, double leg_duration, double s);

/// Builds the crossfade schedule for a sequence with equal-duration legs.
/// Rejects pulses whose Rosen-Zener constant exceeds half a leg
/// (tau > T/2: unphysical truncation). Emits a warning into the trace when
/// the raw profile's endpoint deficit exceeds 1e-2 before normalization.
ControlTrace build_schedule(const GateSequence& seq, const PulseSpec& pulse);
ControlTrace build_schedule(int n_stages, const PulseSpec& pulse);

/// Peak |d theta / dt| over the grid, by central differences (adiabaticity
/// diagnostic).
double dtheta_max(const PulseSpec& pulse, int n_stages = 3);

}  // namespace pauliseq
