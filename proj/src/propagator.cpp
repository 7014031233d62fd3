#include "pauliseq/propagator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace pauliseq {

std::vector<Matrix> stage_operators(const GateSequence& seq) {
  std::vector<Matrix> ops;
  ops.reserve(seq.stages.size());
  for (const auto& st : seq.stages) ops.push_back(matrix_of(st.total()));
  return ops;
}

EvolutionResult evolve(const std::vector<Matrix>& stage_ops, const ControlTrace& trace,
                       const EvolveOptions& options) {
  if (stage_ops.empty() || trace.n_stages() != static_cast<int>(stage_ops.size())) {
    throw std::invalid_argument("evolve: trace stage count != operator count");
  }
  if (trace.n_samples() < 2) throw std::invalid_argument("evolve: trace too short");
  const auto dim = stage_ops.front().rows();

  EvolutionResult res;
  res.u_sim = Matrix::Identity(dim, dim);
  Matrix h(dim, dim);
  Eigen::SelfAdjointEigenSolver<Matrix> es;
  const complexd minus_i(0.0, -1.0);

  for (int k = 0; k + 1 < trace.n_samples(); ++k) {
    const double dt = trace.grid[k + 1] - trace.grid[k];
    h.setZero();
    for (int s = 0; s < trace.n_stages(); ++s) {
      const double mid = 0.5 * (trace.strengths[s][k] + trace.strengths[s][k + 1]);
      if (mid != 0.0) {
        h.noalias() += (-0.5 * options.frequency_to_angular * mid) * stage_ops[s];
      }
    }
    es.compute(h);
    const auto& evals = es.eigenvalues();
    const double max_phase = std::max(std::abs(evals[0]), std::abs(evals[dim - 1])) * dt;
    if (max_phase > options.max_step_phase) {
      throw GridTooCoarse("evolve: step phase " + std::to_string(max_phase) +
                          " rad exceeds the limit; refine the grid");
    }
    const auto& v = es.eigenvectors();
    Vector phases(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      phases[i] = std::exp(minus_i * evals[i] * dt);
    }
    res.u_sim = v * phases.asDiagonal() * v.adjoint() * res.u_sim;
    ++res.steps_used;
  }

  res.unitarity_defect =
      (res.u_sim.adjoint() * res.u_sim - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  return res;
}

EvolutionResult evolve(const GateSequence& seq, const ControlTrace& trace,
                       const EvolveOptions& options) {
  return evolve(stage_operators(seq), trace, options);
}

EvolutionResult converge(const std::vector<Matrix>& stage_ops, const ControlTrace& trace,
                         const std::function<double(const Matrix&)>& error_metric, double tol,
                         const EvolveOptions& options) {
  if (tol <= 0) throw std::invalid_argument("converge: tol must be positive");
  ControlTrace coarse = trace;
  EvolutionResult res = evolve(stage_ops, coarse, options);
  double err = error_metric(res.u_sim);
  for (int round = 0; round < 6; ++round) {
    ControlTrace fine = coarse.refined();
    EvolutionResult fine_res = evolve(stage_ops, fine, options);
    const double fine_err = error_metric(fine_res.u_sim);
    if (std::abs(fine_err - err) < tol) return fine_res;
    coarse = std::move(fine);
    res = std::move(fine_res);
    err = fine_err;
  }
  throw std::runtime_error("converge: error metric still moving after 6 refinements");
}

}  // namespace pauliseq
