#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pauliseq/flow.hpp"
#include "pauliseq/pauli.hpp"
#include "pauliseq/sequence.hpp"

namespace pauliseq {

/// Certificate for non-Clifford (rotation) gates: claimed operator
/// transformations plus the logical unitary they pin down.
struct RotationCertificate {
  std::vector<CertificateClaim> claims;
  Matrix logical_unitary;
};

/// A named sequence with its ideal logical content and qubit-role metadata.
struct GateSpec {
  std::string name;
  GateSequence sequence;
  std::optional<LogicalTransformation> clifford_ideal;
  std::optional<RotationCertificate> rotation_certificate;
  std::optional<double> theta;
  /// True for sequences reconstructed from indirect constraints rather than
  /// an explicit listing; cmd_verify prints a provenance warning for these
  /// and the test suite confirms them by exhaustive search.
  bool reconstructed = false;

  bool is_clifford() const { return clifford_ideal.has_value(); }
};

/// Registered gates: move, s, rz, rx, ry, hadamard, cnot1, cz1, cnot2.
/// theta is required for rz/rx/ry and rejected otherwise.
GateSpec get_gate(const std::string& name, std::optional<double> theta = std::nullopt);

std::vector<std::string> gate_names();

/// One line per gate: name, qubit count, stage count, data-qubit roles.
std::string list_gates();

/// Signed single-qubit axis relabeling: images of X and Z (Y follows from
/// Y = iXZ). Defaults to the identity relabel.
struct AxisPermutation {
  char x_image = 'X';
  int x_sign = +1;
  char z_image = 'Z';
  int z_sign = +1;

  bool is_identity() const { return x_image == 'X' && z_image == 'Z' && x_sign > 0 && z_sign > 0; }
  /// Image of an arbitrary letter as a signed single-qubit letter.
  std::pair<char, int> image(char letter) const;
  void check() const;
};

/// Relabels Pauli axes per qubit (index 0 of `relabel` is qubit 1) across all
/// stages and conjugates the ideal transformation accordingly.
GateSpec permute_axes(const GateSpec& spec, const std::vector<AxisPermutation>& relabel);

/// Replaces stage `stage_index` (1-based) generator sum G by G + eps*extra and
/// clears the canonical flag of that stage. eps = 0 returns spec unchanged.
GateSpec perturb_stage(const GateSpec& spec, int stage_index, const PauliString& extra,
                       double eps);

}  // namespace pauliseq
