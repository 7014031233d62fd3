#pragma once

#include "pauliseq/flow.hpp"
#include "pauliseq/pauli.hpp"

namespace pauliseq {

struct GateErrorReport {
  double error = 0.0;    // 1 - |Tr(U_ideal^dag O_sim)|^2 / d^2
  double leakage = 0.0;  // 1 - (1/d) sum |O_sim|^2 (lost ground-space population)
  Matrix o_sim;          // <j|U_sim|i> over out/in bases
};

/// Trace gate-error metric 1 - |Tr(U_ideal^dag O_sim)|^2 / d^2 over the
/// encoded subspace. in_basis/out_basis are 2^n x d with orthonormal
/// columns, U_ideal is d x d.
GateErrorReport gate_error(const Matrix& u_sim, const Matrix& in_basis, const Matrix& out_basis,
                           const Matrix& u_ideal);

/// The unique (up to global phase) d x d unitary realizing a symplectic
/// signed transformation of the logical generators; the global phase makes
/// the first nonzero entry real positive. Throws on non-symplectic input.
Matrix ideal_unitary(const LogicalTransformation& t);

/// Rosen-Zener transition probability sech^2(pi*g*r*t_g); the no-free-
/// parameter reference for noise-free adiabatic error vs gate time.
double rz_reference(double gap, double rz_ratio, double gate_time);

struct DynamicReferences {
  double time_error;  // 1 - cos(pi*(t_g/t_0 - 1)/4)
  double dc_error;    // pi^2 sigma_f^2 / 16
};

/// The dynamic-gate analytic error expressions quoted for the baseline.
/// Note the time formula and the trace metric disagree at second order: the
/// measured detuning error follows sin^2(pi*(t_g/t_0 - 1)/4), which sits
/// within a factor ~2 of the 1-cos form for small detuning.
DynamicReferences dynamic_references(double t_g, double t_0, double sigma_f);

/// The closed form the trace metric actually produces for a detuned ZZ gate.
double dynamic_detuning_error(double t_g, double t_0);

}  // namespace pauliseq
