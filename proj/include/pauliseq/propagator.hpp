#pragma once

#include <functional>
#include <numbers>
#include <vector>

#include "pauliseq/pauli.hpp"
#include "pauliseq/schedule.hpp"
#include "pauliseq/sequence.hpp"

namespace pauliseq {

/// Raised when the time grid is too coarse for the midpoint stepper
/// (more than half a cycle of phase accumulated in one step).
struct GridTooCoarse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvolutionResult {
  Matrix u_sim;
  int steps_used = 0;
  double unitarity_defect = 0.0;  // max |(U^dag U - I)_{ij}|
};

/// Quoted strengths are ordinary frequencies (E = h nu): a trace entry g
/// enters the Hamiltonian as the angular rate 2*pi*g, i.e.
/// H(t) = -(2*pi/2) * sum_i g~_i(t) * P_i.
inline constexpr double kFrequencyToAngular = 2.0 * std::numbers::pi;

struct EvolveOptions {
  /// Conversion of trace strengths to angular units. 1.0 means the trace is
  /// already angular (used by the dynamic baseline's calibrated amplitudes).
  double frequency_to_angular = kFrequencyToAngular;
  /// Reject steps whose angular phase exceeds this (0.5 cycles).
  double max_step_phase = std::numbers::pi;
};

/// Time-ordered unitary for H(t) = -(1/2) sum_i w_i(t) * stage_ops[i], with
/// w_i the (converted) trace strengths. Midpoint piecewise-constant stepping;
/// each step exponentiated exactly through a Hermitian eigendecomposition.
EvolutionResult evolve(const std::vector<Matrix>& stage_ops, const ControlTrace& trace,
                       const EvolveOptions& options = {});

/// Convenience overload building the stage operator matrices from a sequence.
EvolutionResult evolve(const GateSequence& seq, const ControlTrace& trace,
                       const EvolveOptions& options = {});

std::vector<Matrix> stage_operators(const GateSequence& seq);

/// Refines the trace (midpoint interpolation of the same noise realization)
/// until the supplied error metric changes by less than tol between
/// successive refinements; returns the finer result. Throws after 6 doublings
/// without convergence.
EvolutionResult converge(const std::vector<Matrix>& stage_ops, const ControlTrace& trace,
                         const std::function<double(const Matrix&)>& error_metric, double tol,
                         const EvolveOptions& options = {});

}  // namespace pauliseq
