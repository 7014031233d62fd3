#pragma once

#include <cstdint>

#include "pauliseq/metrics.hpp"
#include "pauliseq/noise.hpp"
#include "pauliseq/propagator.hpp"
#include "pauliseq/schedule.hpp"

namespace pauliseq {

enum class DynamicEnvelope { Square, Crossfade };

/// The comparison gate: a timed 2-qubit ZZ interaction whose accumulated
/// phase of pi/4 is equivalent to a CNOT up to omitted single-qubit
/// rotations (U_ideal is fixed to exp(+i pi/4 ZZ) accordingly).
struct DynamicSpec {
  double t_0 = 10.0;           // calibration time
  double amplitude = 0.0;      // peak strength in angular units (ns^-1)
  DynamicEnvelope envelope = DynamicEnvelope::Square;
  PulseSpec pulse;             // shape parameters for the crossfade envelope
  int samples = 4096;
};

/// Unit-peak on/off envelope over [0, t_g]: 1 everywhere for Square; for
/// Crossfade, the schedule's theta profile ramps sin(theta) up over the
/// first half and cos(theta) down over the second.
std::vector<double> dynamic_envelope(const DynamicSpec& spec, const std::vector<double>& grid,
                                     double t_g);

/// Bisects the amplitude until the accumulated ZZ phase at t_g = t_0 equals
/// pi/4 within 1e-10. Square pulses give a = pi/(2 t_0) in angular units.
DynamicSpec calibrate(double t_0, DynamicEnvelope envelope = DynamicEnvelope::Square,
                      const PulseSpec& pulse = {}, int samples = 4096);

/// Accumulated phase integral (amplitude/2) * int envelope dt at gate time
/// t_g (trapezoid on the sample grid).
double accumulated_phase(const DynamicSpec& spec, double t_g);

/// Evolves H(t) = -(a * envelope * m(t)/2) ZZ for time t_g with one noise
/// line and scores against exp(+i pi/4 ZZ) in the computational basis.
GateErrorReport simulate_dynamic(const DynamicSpec& spec, double t_g, const NoiseSpec& noise,
                                 std::uint64_t run_index);

}  // namespace pauliseq
