#include "pauliseq/gates.hpp"

#include <cmath>
#include <sstream>

#include "pauliseq/metrics.hpp"

namespace pauliseq {

namespace {

PauliString str1(int n, int q, char l, int sign = +1) {
  return PauliString::single(n, q, l, sign);
}

PauliString str2(int n, int qa, char la, int qb, char lb, int sign = +1) {
  std::string s(n, 'I');
  s[qa - 1] = la;
  s[qb - 1] = lb;
  return PauliString(std::move(s), sign);
}

LogicalTransformation ideal_of(std::vector<int> in, std::vector<int> out,
                               std::vector<PauliString> xs, std::vector<PauliString> zs) {
  LogicalTransformation t;
  t.in_qubits = std::move(in);
  t.out_qubits = std::move(out);
  t.x_images = std::move(xs);
  t.z_images = std::move(zs);
  return t;
}

GateSpec make_clifford(std::string name, GateSequence seq, LogicalTransformation ideal,
                       bool reconstructed = false) {
  GateSpec spec;
  spec.name = std::move(name);
  spec.sequence = std::move(seq);
  spec.sequence.name = spec.name;
  spec.clifford_ideal = std::move(ideal);
  spec.reconstructed = reconstructed;
  // Fail loudly at construction if the registered sequence does not realize
  // the registered transformation.
  const LogicalTransformation tracked = track_clifford(spec.sequence);
  if (!(tracked == *spec.clifford_ideal)) {
    throw std::logic_error("gate '" + spec.name + "': tracked transformation " + tracked.str() +
                           " differs from the registered ideal " + spec.clifford_ideal->str());
  }
  return spec;
}

GateSpec make_move() {
  GateSequence seq{2, {1}, {2}, {stage_of({PauliString("IX")}), stage_of({PauliString("ZZ")}),
                                 stage_of({PauliString("XI")})}};
  return make_clifford("move", std::move(seq),
                       ideal_of({1}, {2}, {str1(2, 2, 'X')}, {str1(2, 2, 'Z')}));
}

GateSpec make_s() {
  GateSequence seq{2, {1}, {1}, {stage_of({PauliString("IX")}), stage_of({PauliString("ZZ")}),
                                 stage_of({PauliString("IY", -1)})}};
  return make_clifford("s", std::move(seq),
                       ideal_of({1}, {1}, {str1(2, 1, 'Y')}, {str1(2, 1, 'Z')}));
}

GateSpec make_hadamard() {
  GateSequence seq{2, {1}, {2}, {stage_of({PauliString("IX")}), stage_of({PauliString("XZ")}),
                                 stage_of({PauliString("ZI")})}};
  return make_clifford("hadamard", std::move(seq),
                       ideal_of({1}, {2}, {str1(2, 2, 'Z')}, {str1(2, 2, 'X')}));
}

GateSpec make_cnot1() {
  GateSequence seq{3,
                   {1, 3},
                   {1, 3},
                   {stage_of({PauliString("IXI")}), stage_of({PauliString("ZZI")}),
                    stage_of({PauliString("IXX")}), stage_of({PauliString("IZI")})}};
  return make_clifford(
      "cnot1", std::move(seq),
      ideal_of({1, 3}, {1, 3}, {str2(3, 1, 'X', 3, 'X'), str1(3, 3, 'X')},
               {str1(3, 1, 'Z'), str2(3, 1, 'Z', 3, 'Z')}));
}

GateSpec make_cz1() {
  GateSequence seq{3,
                   {1, 3},
                   {1, 3},
                   {stage_of({PauliString("IXI")}), stage_of({PauliString("ZZI")}),
                    stage_of({PauliString("IXZ")}), stage_of({PauliString("IZI")})}};
  return make_clifford(
      "cz1", std::move(seq),
      ideal_of({1, 3}, {1, 3}, {str2(3, 1, 'X', 3, 'Z'), str2(3, 1, 'Z', 3, 'X')},
               {str1(3, 1, 'Z'), str1(3, 3, 'Z')}));
}

GateSpec make_cnot2() {
  StageHamiltonian st1 = stage_of({PauliString("IIXX"), PauliString("IIZZ")});
  StageHamiltonian st2 = stage_of({PauliString("ZIZI"), PauliString("IXIX")});
  StageHamiltonian st3 = stage_of({PauliString("XIII"), PauliString("IZII")});
  GateSequence seq{4, {1, 2}, {3, 4}, {st1, st2, st3}};
  return make_clifford(
      "cnot2", std::move(seq),
      ideal_of({1, 2}, {3, 4}, {str2(4, 3, 'X', 4, 'X'), str1(4, 4, 'X')},
               {str1(4, 3, 'Z'), str2(4, 3, 'Z', 4, 'Z')}),
      /*reconstructed=*/true);
}

Matrix rotation_matrix(char axis, double theta) {
  const complexd i(0.0, 1.0);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  switch (axis) {
    case 'Z': return Matrix{{std::exp(-i * theta / 2.0), 0.0}, {0.0, std::exp(i * theta / 2.0)}};
    case 'X': return Matrix{{complexd(c, 0), -i * s}, {-i * s, complexd(c, 0)}};
    case 'Y': return Matrix{{complexd(c, 0), complexd(-s, 0)}, {complexd(s, 0), complexd(c, 0)}};
  }
  throw std::logic_error("bad rotation axis");
}

GateSpec make_rz(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  PauliSum final_stage(PauliString("IX"), c);
  final_stage.add(PauliString("IY"), -s);
  if (final_stage.empty()) {
    // theta a multiple of pi with cos rounding to 0 cannot happen; the sum
    // is empty only if both coefficients vanish, which they never do.
    throw std::logic_error("rz: degenerate final stage");
  }
  GateSequence seq{2, {1}, {1}, {stage_of({PauliString("IX")}), stage_of({PauliString("ZZ")}),
                                 stage_of_sums({final_stage})}};
  seq.name = "rz";

  GateSpec spec;
  spec.name = "rz";
  spec.theta = theta;
  spec.sequence = std::move(seq);
  RotationCertificate cert;
  PauliSum in_op(PauliString("XI"), c);
  in_op.add(PauliString("YI"), -s);
  cert.claims.push_back({in_op, PauliSum(PauliString("XI"))});
  cert.claims.push_back({PauliSum(PauliString("ZI")), PauliSum(PauliString("ZI"))});
  cert.logical_unitary = rotation_matrix('Z', theta);
  spec.rotation_certificate = std::move(cert);
  return spec;
}

std::vector<AxisPermutation> data_qubit_relabel(const AxisPermutation& p, int n_qubits,
                                                int data_qubit) {
  std::vector<AxisPermutation> relabel(n_qubits);
  relabel[data_qubit - 1] = p;
  return relabel;
}

}  // namespace

std::pair<char, int> AxisPermutation::image(char letter) const {
  switch (letter) {
    case 'I': return {'I', +1};
    case 'X': return {x_image, x_sign};
    case 'Z': return {z_image, z_sign};
    case 'Y': {
      // Y = i X Z, so the image is i * (x_sign x_image) * (z_sign z_image).
      PauliProduct p = multiply(PauliString(std::string(1, x_image), x_sign),
                                PauliString(std::string(1, z_image), z_sign));
      const int quarters = (p.phase_quarters + 1) & 3;  // extra factor of i
      if (quarters % 2 != 0) throw std::invalid_argument("axis permutation maps Y off-axis");
      return {p.product.letters()[0], quarters == 0 ? +1 : -1};
    }
  }
  throw std::invalid_argument("bad letter");
}

void AxisPermutation::check() const {
  if (x_image == 'I' || z_image == 'I' || x_image == z_image) {
    throw std::invalid_argument("axis permutation must send X and Z to distinct non-identity axes");
  }
  if ((x_sign != 1 && x_sign != -1) || (z_sign != 1 && z_sign != -1)) {
    throw std::invalid_argument("axis permutation signs must be +/-1");
  }
  image('Y');
}

namespace {

PauliString relabel_string(const PauliString& s, const std::vector<AxisPermutation>& relabel) {
  std::string letters(s.n_qubits(), 'I');
  int sign = s.sign();
  for (int q = 1; q <= s.n_qubits(); ++q) {
    const auto [l, sgn] = relabel[q - 1].image(s.letters()[q - 1]);
    letters[q - 1] = l;
    sign *= sgn;
  }
  return PauliString(std::move(letters), sign);
}

PauliSum relabel_sum(const PauliSum& sum, const std::vector<AxisPermutation>& relabel) {
  PauliSum out(sum.n_qubits());
  for (const auto& [letters, coeff] : sum.terms()) {
    out.add(relabel_string(PauliString(letters), relabel), coeff);
  }
  return out;
}

/// 2x2 unitary realizing the permutation as conjugation.
Matrix relabel_unitary_1q(const AxisPermutation& p) {
  LogicalTransformation t;
  t.in_qubits = {1};
  t.out_qubits = {1};
  t.x_images = {PauliString(std::string(1, p.x_image), p.x_sign)};
  t.z_images = {PauliString(std::string(1, p.z_image), p.z_sign)};
  return ideal_unitary(t);
}

}  // namespace

GateSpec permute_axes(const GateSpec& spec, const std::vector<AxisPermutation>& relabel) {
  if (static_cast<int>(relabel.size()) != spec.sequence.n_qubits) {
    throw std::invalid_argument("permute_axes: need one AxisPermutation per qubit");
  }
  for (const auto& p : relabel) p.check();

  GateSpec out = spec;
  for (auto& stage : out.sequence.stages) {
    for (auto& gen : stage.generators) gen = relabel_sum(gen, relabel);
  }

  if (spec.clifford_ideal) {
    // Conjugation: T'(A) = V T(V^dag A V) V^dag with V the relabel Clifford.
    LogicalTransformation conj = *spec.clifford_ideal;
    for (std::size_t k = 0; k < conj.x_images.size(); ++k) {
      const int q = conj.in_qubits[k];
      auto conjugate_one = [&](char in_letter) {
        // V^dag (letter at q) V: the preimage under the relabel.
        const AxisPermutation& p = relabel[q - 1];
        char pre = 0;
        int pre_sign = 0;
        for (char l : {'X', 'Y', 'Z'}) {
          const auto [img, sgn] = p.image(l);
          if (img == in_letter) {
            pre = l;
            pre_sign = sgn;
            break;
          }
        }
        // T of the signed single-letter logical at q.
        const auto& xs = spec.clifford_ideal->x_images[k];
        const auto& zs = spec.clifford_ideal->z_images[k];
        PauliString mapped = [&]() -> PauliString {
          switch (pre) {
            case 'X': return xs;
            case 'Z': return zs;
            default: {
              PauliProduct prod = multiply(xs, zs);  // Y -> i * T(X) T(Z)
              const int quarters = (prod.phase_quarters + 1) & 3;
              if (quarters % 2 != 0) throw std::logic_error("non-Hermitian Y image");
              return prod.product.with_sign(quarters == 0 ? +1 : -1);
            }
          }
        }();
        if (pre_sign < 0) mapped = mapped.with_sign(-mapped.sign());
        return relabel_string(mapped, relabel);
      };
      conj.x_images[k] = conjugate_one('X');
      conj.z_images[k] = conjugate_one('Z');
    }
    out.clifford_ideal = conj;
    const LogicalTransformation tracked = track_clifford(out.sequence);
    if (!(tracked == conj)) {
      throw std::logic_error("permute_axes: conjugated ideal disagrees with tracking");
    }
  }

  if (spec.rotation_certificate) {
    RotationCertificate cert;
    for (const auto& claim : spec.rotation_certificate->claims) {
      cert.claims.push_back({relabel_sum(claim.input, relabel), relabel_sum(claim.output, relabel)});
    }
    Matrix v_in = Matrix::Identity(1, 1);
    for (int q : spec.sequence.data_in) {
      const Matrix v = relabel_unitary_1q(relabel[q - 1]);
      Matrix next(v_in.rows() * 2, v_in.cols() * 2);
      for (Eigen::Index i = 0; i < v_in.rows(); ++i) {
        for (Eigen::Index j = 0; j < v_in.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = v_in(i, j) * v;
      }
      v_in = std::move(next);
    }
    Matrix v_out = Matrix::Identity(1, 1);
    for (int q : spec.sequence.data_out) {
      const Matrix v = relabel_unitary_1q(relabel[q - 1]);
      Matrix next(v_out.rows() * 2, v_out.cols() * 2);
      for (Eigen::Index i = 0; i < v_out.rows(); ++i) {
        for (Eigen::Index j = 0; j < v_out.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = v_out(i, j) * v;
      }
      v_out = std::move(next);
    }
    cert.logical_unitary = v_out * spec.rotation_certificate->logical_unitary * v_in.adjoint();
    out.rotation_certificate = std::move(cert);
  }
  return out;
}

GateSpec perturb_stage(const GateSpec& spec, int stage_index, const PauliString& extra,
                       double eps) {
  if (stage_index < 1 || stage_index > spec.sequence.n_stages()) {
    throw std::invalid_argument("perturb_stage: stage index out of range");
  }
  GateSpec out = spec;
  auto& stage = out.sequence.stages[stage_index - 1];
  stage.generators.front().add(extra, eps);
  stage.canonical = false;
  return out;
}

GateSpec get_gate(const std::string& name, std::optional<double> theta) {
  const bool rotation = name == "rz" || name == "rx" || name == "ry";
  if (rotation && !theta) {
    throw std::invalid_argument("gate '" + name + "' requires an angle theta");
  }
  if (!rotation && theta) {
    throw std::invalid_argument("gate '" + name + "' takes no angle");
  }
  if (name == "move") return make_move();
  if (name == "s") return make_s();
  if (name == "hadamard") return make_hadamard();
  if (name == "cnot1") return make_cnot1();
  if (name == "cz1") return make_cz1();
  if (name == "cnot2") return make_cnot2();
  if (name == "rz") return make_rz(*theta);
  if (name == "rx") {
    // X <-> Z (Y -> -Y) on the data qubit: the Hadamard-axis relabel.
    GateSpec spec = permute_axes(make_rz(*theta),
                                 data_qubit_relabel({'Z', +1, 'X', +1}, 2, 1));
    spec.name = "rx";
    spec.sequence.name = "rx";
    return spec;
  }
  if (name == "ry") {
    // X -> X, Z -> Y (Y -> -Z): rotates the z-axis onto y.
    GateSpec spec = permute_axes(make_rz(*theta),
                                 data_qubit_relabel({'X', +1, 'Y', +1}, 2, 1));
    spec.name = "ry";
    spec.sequence.name = "ry";
    return spec;
  }
  throw std::invalid_argument("unknown gate '" + name + "'");
}

std::vector<std::string> gate_names() {
  return {"move", "s", "rz", "rx", "ry", "hadamard", "cnot1", "cz1", "cnot2"};
}

std::string list_gates() {
  std::ostringstream os;
  for (const auto& name : gate_names()) {
    const bool rotation = name == "rz" || name == "rx" || name == "ry";
    const GateSpec spec = rotation ? get_gate(name, 0.5) : get_gate(name);
    const auto& seq = spec.sequence;
    os << name << ": " << seq.n_qubits << " qubits, " << seq.n_stages() << " stages, data";
    for (std::size_t k = 0; k < seq.data_in.size(); ++k) {
      os << (k ? "," : " ") << "q" << seq.data_in[k] << "->q" << seq.data_out[k];
    }
    if (rotation) os << ", angle theta";
    if (spec.reconstructed) os << " [reconstructed]";
    os << "\n";
  }
  return os.str();
}

}  // namespace pauliseq
