#include <doctest.h>

#include "pauliseq/gates.hpp"
#include "pauliseq/search.hpp"

using namespace pauliseq;

TEST_CASE("search rediscovers the 1-ancilla CNOT sequence") {
  const GateSpec cnot = get_gate("cnot1");
  SearchConstraints c;
  c.n_qubits = 3;
  c.max_stages = 4;
  c.max_weight = 2;
  c.max_results = 100000;
  const auto hits = search_sequences(*cnot.clifford_ideal, c);
  REQUIRE_FALSE(hits.empty());
  const bool found = std::any_of(hits.begin(), hits.end(), [&](const GateSequence& s) {
    return s.stages == cnot.sequence.stages;
  });
  CHECK(found);
  // Every searched sequence tracks to a symplectic transformation.
  std::size_t checked = 0;
  for (const auto& s : hits) {
    if (++checked > 100) break;
    CHECK(track_clifford(s).symplectic());
  }
  // Determinism of the enumeration order.
  const auto again = search_sequences(*cnot.clifford_ideal, c);
  REQUIRE(again.size() == hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i) CHECK(again[i].stages == hits[i].stages);
}

TEST_CASE("search finds the double-MOVE identity and rejects repeated stages") {
  LogicalTransformation identity;
  identity.in_qubits = {1};
  identity.out_qubits = {1};
  identity.x_images = {PauliString("XI")};
  identity.z_images = {PauliString("ZI")};
  SearchConstraints c;
  c.n_qubits = 2;
  c.max_stages = 5;
  c.max_weight = 2;
  c.max_results = 100000;
  const auto hits = search_sequences(identity, c);
  REQUIRE_FALSE(hits.empty());
  const GateSequence double_move = [&] {
    GateSequence s{2, {1}, {1},
                   {stage_of({PauliString("IX")}), stage_of({PauliString("ZZ")}),
                    stage_of({PauliString("XI")}), stage_of({PauliString("ZZ")}),
                    stage_of({PauliString("IX")})}};
    return s;
  }();
  CHECK(std::any_of(hits.begin(), hits.end(),
                    [&](const GateSequence& s) { return s.stages == double_move.stages; }));
  for (const auto& s : hits) {
    for (int i = 1; i < s.n_stages(); ++i) CHECK_FALSE(s.stages[i] == s.stages[i - 1]);
  }
}

TEST_CASE("search confirms the reconstructed 2-ancilla CNOT") {
  const GateSpec cnot2 = get_gate("cnot2");
  SearchConstraints c;
  c.n_qubits = 4;
  c.max_stages = 3;
  c.max_weight = 2;
  c.allow_pair_stages = true;
  c.max_results = 1000000;
  const auto hits = search_sequences(*cnot2.clifford_ideal, c);
  REQUIRE_FALSE(hits.empty());
  CHECK(std::any_of(hits.begin(), hits.end(), [&](const GateSequence& s) {
    return s.stages == cnot2.sequence.stages;
  }));
}

TEST_CASE("constraint guards") {
  SearchConstraints c;
  c.n_qubits = 6;
  CHECK_THROWS_AS(c.check(), std::invalid_argument);
  c.n_qubits = 3;
  c.max_weight = 3;
  CHECK_THROWS_AS(c.check(), std::invalid_argument);
}
