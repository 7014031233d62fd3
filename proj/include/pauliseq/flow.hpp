#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pauliseq/pauli.hpp"
#include "pauliseq/sequence.hpp"

namespace pauliseq {

/// Raised when no product of current-stage generators restores commutation
/// with the next stage (the sequence does not protect that logical).
struct HandoffFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Raised when a representative's support cannot be confined to the output
/// data qubits by final-stage generator multiplication.
struct ReductionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Raised when a required handoff product carries an imaginary phase.
struct PhaseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LegReport {
  double min_gap = 0.0;        // min over the grid of E[d] - E[0]
  double max_ground_split = 0.0;  // max over the grid of E[d-1] - E[0]
};

struct ValidationReport {
  bool passed = false;
  std::vector<int> ground_dims;           // per stage
  std::vector<LegReport> legs;            // per leg
  std::vector<bool> stage_generators_commute;  // per stage
  std::vector<bool> stage_canonical_ok;   // per stage (true when not flagged)
  std::vector<std::string> failures;      // human-readable reasons

  std::string str() const;
};

/// Degeneracy threshold used when counting ground states and the gap floor
/// below which a leg is flagged.
inline constexpr double kGapTol = 1e-9;

/// Structural and spectral legality of a sequence at unit strengths.
///
/// Per stage: pairwise generator commutation, canonical-stage promises, and
/// the ground-space dimension of -(sum of generators)/2. Per leg: the gap
/// above the protected multiplet, minimized over a 33-point crossfade grid
/// g_i = cos(s*pi/2), g_{i+1} = sin(s*pi/2) (so g_i^2 + g_{i+1}^2 = 1 on the
/// whole grid). Failures are reported, never thrown.
ValidationReport validate_sequence(const GateSequence& seq, int grid_points = 33);

/// The logical gate extracted by operator-handoff tracking: images of the
/// input logical generators X_k, Z_k (k over data_in, in listed order) as
/// signed strings supported on data_out.
struct LogicalTransformation {
  std::vector<int> in_qubits, out_qubits;  // 1-based
  std::vector<PauliString> x_images, z_images;

  /// True iff images satisfy the same commutation relations as the inputs.
  bool symplectic() const;
  /// Restriction of an image to the out-qubit positions, as an m-qubit
  /// signed string in out-qubit order. Throws if support leaks elsewhere.
  PauliString logical_image(const PauliString& full) const;
  std::string str() const;

  friend bool operator==(const LogicalTransformation& a, const LogicalTransformation& b) = default;
};

/// Runs the handoff calculus over a Clifford sequence (every generator a
/// single Pauli string). Maintains one representative per logical generator;
/// at each leg multiplies by the first current-stage subset product (binary
/// counting order) that commutes with every current- and next-stage
/// generator; finally reduces modulo the last stage's group so support lands
/// on data_out. Deterministic. Throws HandoffFailure / ReductionFailure /
/// PhaseFailure as appropriate.
LogicalTransformation track_clifford(const GateSequence& seq);

/// One claimed operator transformation: `input` acts on the first ground
/// space (support on data_in), `output` on the last (support on data_out).
struct CertificateClaim {
  PauliSum input;
  PauliSum output;
};

struct CertificateResult {
  bool verified = false;
  std::vector<std::string> trace;  // per-claim diagnostic lines

  explicit operator bool() const { return verified; }
};

/// Checks claims by building a chain of per-leg representatives. Starting
/// from the claim input, each handoff right-multiplies individual terms by
/// subset products of the current stage's generators (these act as +1 on the
/// stage ground space, so the ground action is preserved exactly); a chain
/// link is accepted when the new representative commutes (commutes_sum) with
/// every generator active in its leg. End-point actions are compared
/// numerically through ground projectors: ||P (A - B) P||_F < 1e-9.
CertificateResult verify_certificate(const GateSequence& seq,
                                     const std::vector<CertificateClaim>& claims);

/// Orthonormal ground basis of a stage, one column per binary word of the
/// data qubits (first listed qubit = most significant bit). Non-data qubits
/// sit in the generator-stabilized state. Phases fixed by making the
/// largest-magnitude amplitude real positive. Throws std::runtime_error when
/// data-qubit words fail to distinguish the ground states.
Matrix ground_basis(const StageHamiltonian& stage, const std::vector<int>& data_qubits,
                    int n_qubits);

/// Projector onto the ground space of -(stage total)/2.
Matrix ground_projector(const StageHamiltonian& stage, int n_qubits);

}  // namespace pauliseq
