#pragma once

#include <vector>

#include "pauliseq/flow.hpp"
#include "pauliseq/sequence.hpp"

namespace pauliseq {

struct SearchConstraints {
  int n_qubits = 3;
  int max_stages = 4;
  int max_weight = 2;
  bool allow_pair_stages = false;  // stages with two commuting generators
  int leg_grid_points = 3;         // coarse grid while enumerating
  std::size_t max_results = 64;
  std::uint64_t max_nodes = 50'000'000;

  void check() const;
};

/// Exhaustive enumeration of legal sequences whose tracked transformation
/// equals `target` exactly (signs included). Stage candidates are single
/// positive-sign Pauli strings of weight <= max_weight, plus (optionally)
/// pairs of distinct commuting strings; first/last stages are restricted to
/// generators supported off data_in/data_out respectively, which every legal
/// sequence must satisfy. Candidates found on a coarse leg grid are
/// re-validated on the full 33-point grid. Deterministic order: stage lists
/// are sorted lexicographically and the walk is depth-first.
std::vector<GateSequence> search_sequences(const LogicalTransformation& target,
                                           const SearchConstraints& constraints);

}  // namespace pauliseq
