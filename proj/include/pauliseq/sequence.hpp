#pragma once

#include <string>
#include <vector>

#include "pauliseq/pauli.hpp"

namespace pauliseq {

/// One Hamiltonian of an adiabatic sequence: H_i = -g_i(t)/2 * (sum of
/// generators). All generators of a stage share a single control envelope.
struct StageHamiltonian {
  std::vector<PauliSum> generators;
  /// Canonical stages promise unit generators (pairwise anticommuting
  /// strings, coefficient norm 1); validate_sequence checks the promise.
  bool canonical = true;

  /// Sum of all generators (the operator multiplying -g_i(t)/2).
  PauliSum total() const;
  int n_qubits() const;

  friend bool operator==(const StageHamiltonian& a, const StageHamiltonian& b);
};

StageHamiltonian stage_of(std::initializer_list<PauliString> gens);
StageHamiltonian stage_of_sums(std::initializer_list<PauliSum> gens);

/// Ordered stages plus qubit roles; consumed by both the symbolic verifier
/// and the numerical simulator.
struct GateSequence {
  int n_qubits = 0;
  std::vector<int> data_in;   // 1-based, ordered; first listed = most significant
  std::vector<int> data_out;  // 1-based, ordered
  std::vector<StageHamiltonian> stages;
  std::string name;

  int n_data() const { return static_cast<int>(data_in.size()); }
  int n_stages() const { return static_cast<int>(stages.size()); }
  int n_legs() const { return n_stages() - 1; }

  /// Throws std::invalid_argument on structural problems (stage count < 2,
  /// equal consecutive stages, bad qubit roles, mismatched dimensions).
  void check_structure() const;
};

/// Text format, round-trip exact for sequences whose generators are single
/// Pauli strings:
///
///   # optional comments
///   name: move
///   data_in: 1
///   data_out: 2
///   IX
///   ZZ
///   XI
///
/// Stage lines list generators separated by " + "; each generator is a
/// signed Pauli string ("-IY"). Sum generators render with coefficients
/// (display only; such files do not parse back).
std::string render_sequence(const GateSequence& seq);
GateSequence parse_sequence(const std::string& text);

}  // namespace pauliseq
