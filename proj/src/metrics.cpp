#include "pauliseq/metrics.hpp"

#include <cmath>
#include <numbers>

namespace pauliseq {

GateErrorReport gate_error(const Matrix& u_sim, const Matrix& in_basis, const Matrix& out_basis,
                           const Matrix& u_ideal) {
  const auto d = u_ideal.rows();
  if (in_basis.cols() != d || out_basis.cols() != d || u_ideal.cols() != d ||
      in_basis.rows() != u_sim.rows() || out_basis.rows() != u_sim.rows()) {
    throw std::invalid_argument("gate_error: basis dimensions do not match");
  }
  GateErrorReport rep;
  rep.o_sim = out_basis.adjoint() * u_sim * in_basis;
  const complexd tr = (u_ideal.adjoint() * rep.o_sim).trace();
  rep.error = 1.0 - std::norm(tr) / static_cast<double>(d * d);
  rep.leakage = 1.0 - rep.o_sim.squaredNorm() / static_cast<double>(d);
  return rep;
}

namespace {

void fix_global_phase(Matrix& u) {
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      if (std::abs(u(i, j)) > 1e-12) {
        u *= std::conj(u(i, j)) / std::abs(u(i, j));
        return;
      }
    }
  }
}

}  // namespace

Matrix ideal_unitary(const LogicalTransformation& t) {
  if (!t.symplectic()) {
    throw std::invalid_argument("ideal_unitary: transformation is not symplectic");
  }
  const int m = static_cast<int>(t.in_qubits.size());
  const int d = 1 << m;

  // Logical m-qubit images (out-qubit order).
  std::vector<PauliString> xs, zs;
  for (int k = 0; k < m; ++k) {
    xs.push_back(t.logical_image(t.x_images[k]));
    zs.push_back(t.logical_image(t.z_images[k]));
  }

  // |psi_0> is the joint +1 eigenstate of the Z images; the other columns
  // follow by applying X images, exactly as |w> = prod X_k^{w_k} |0>.
  Matrix proj = Matrix::Identity(d, d);
  for (int k = 0; k < m; ++k) {
    proj = proj * 0.5 * (Matrix::Identity(d, d) + matrix_of(zs[k]));
  }
  Vector psi0;
  double best = -1.0;
  for (int c = 0; c < d; ++c) {
    const double n = proj.col(c).norm();
    if (n > best) {
      best = n;
      psi0 = proj.col(c);
    }
  }
  if (best < 1e-9) {
    throw std::invalid_argument("ideal_unitary: Z-image stabilizer state does not exist");
  }
  psi0 /= psi0.norm();

  Matrix u(d, d);
  for (int w = 0; w < d; ++w) {
    Vector col = psi0;
    for (int k = 0; k < m; ++k) {
      if ((w >> (m - 1 - k)) & 1) col = matrix_of(xs[k]) * col;
    }
    u.col(w) = col;
  }
  fix_global_phase(u);

  // The synthesis assumed phases consistent; reject sign-inconsistent input.
  for (int k = 0; k < m; ++k) {
    PauliString zk = PauliString::single(m, k + 1, 'Z');
    if ((u * matrix_of(zk) * u.adjoint() - matrix_of(zs[k])).norm() > 1e-9 ||
        (u * matrix_of(PauliString::single(m, k + 1, 'X')) * u.adjoint() - matrix_of(xs[k]))
                .norm() > 1e-9) {
      throw std::invalid_argument("ideal_unitary: images are not realized by any unitary");
    }
  }
  return u;
}

double rz_reference(double gap, double rz_ratio, double gate_time) {
  if (gap <= 0 || rz_ratio <= 0 || gate_time < 0) {
    throw std::invalid_argument("rz_reference: arguments must be positive");
  }
  const double x = std::numbers::pi * gap * rz_ratio * gate_time;
  const double s = 1.0 / std::cosh(x);
  return s * s;
}

DynamicReferences dynamic_references(double t_g, double t_0, double sigma_f) {
  if (t_0 <= 0) throw std::invalid_argument("dynamic_references: t_0 must be positive");
  DynamicReferences r;
  r.time_error = 1.0 - std::cos(std::numbers::pi * (t_g / t_0 - 1.0) / 4.0);
  r.dc_error = std::numbers::pi * std::numbers::pi * sigma_f * sigma_f / 16.0;
  return r;
}

double dynamic_detuning_error(double t_g, double t_0) {
  const double s = std::sin(std::numbers::pi * (t_g / t_0 - 1.0) / 4.0);
  return s * s;
}

}  // namespace pauliseq
