#include <doctest.h>

#include "pauliseq/flow.hpp"
#include "pauliseq/gates.hpp"

using namespace pauliseq;

namespace {

GateSequence move_seq() { return get_gate("move").sequence; }

}  // namespace

TEST_CASE("validate_sequence on the MOVE gate") {
  const ValidationReport rep = validate_sequence(move_seq());
  CHECK(rep.passed);
  REQUIRE(rep.ground_dims.size() == 3);
  for (int d : rep.ground_dims) CHECK(d == 2);
  REQUIRE(rep.legs.size() == 2);
  // Anticommuting single-generator crossfade: gap exactly 1 on the grid.
  for (const auto& leg : rep.legs) {
    CHECK(leg.min_gap == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(leg.max_ground_split < 1e-12);
  }
}

TEST_CASE("validate_sequence on CNOT-1a ground dimensions") {
  const ValidationReport rep = validate_sequence(get_gate("cnot1").sequence);
  CHECK(rep.passed);
  REQUIRE(rep.ground_dims.size() == 4);
  for (int d : rep.ground_dims) CHECK(d == 4);
}

TEST_CASE("validate_sequence flags a dimension-breaking sequence") {
  GateSequence bad{1, {1}, {1}, {stage_of({PauliString("X")}), stage_of({PauliString("Z")})}};
  const ValidationReport rep = validate_sequence(bad);
  CHECK_FALSE(rep.passed);
  CHECK(rep.ground_dims == std::vector<int>{1, 1});
}

TEST_CASE("validate_sequence flags non-commuting stage generators") {
  GateSequence bad{2, {1}, {1},
                   {stage_of({PauliString("IX"), PauliString("IZ")}), stage_of({PauliString("ZZ")})}};
  const ValidationReport rep = validate_sequence(bad);
  CHECK_FALSE(rep.passed);
  CHECK_FALSE(rep.stage_generators_commute[0]);
}

TEST_CASE("track_clifford reproduces the worked transformations") {
  SUBCASE("move") {
    const auto t = track_clifford(move_seq());
    CHECK(t.x_images[0] == PauliString("IX"));
    CHECK(t.z_images[0] == PauliString("IZ"));
    CHECK(t.str() == "X1 -> +X2, Z1 -> +Z2");
  }
  SUBCASE("s gate: Z1 -> Z1 and X1 -> Y1") {
    const auto t = track_clifford(get_gate("s").sequence);
    CHECK(t.x_images[0] == PauliString("YI"));
    CHECK(t.z_images[0] == PauliString("ZI"));
  }
  SUBCASE("hadamard: X1 -> Z2, Z1 -> X2") {
    const auto t = track_clifford(get_gate("hadamard").sequence);
    CHECK(t.x_images[0] == PauliString("IZ"));
    CHECK(t.z_images[0] == PauliString("IX"));
  }
  SUBCASE("cnot1: control 1, target 3") {
    const auto t = track_clifford(get_gate("cnot1").sequence);
    CHECK(t.x_images[0] == PauliString("XIX"));
    CHECK(t.z_images[0] == PauliString("ZII"));
    CHECK(t.x_images[1] == PauliString("IIX"));
    CHECK(t.z_images[1] == PauliString("ZIZ"));
  }
}

TEST_CASE("track_clifford is deterministic") {
  const auto a = track_clifford(get_gate("cnot1").sequence);
  const auto b = track_clifford(get_gate("cnot1").sequence);
  CHECK(a == b);
}

TEST_CASE("track_clifford preserves the symplectic form on every library gate") {
  for (const char* name : {"move", "s", "hadamard", "cnot1", "cz1", "cnot2"}) {
    const auto t = track_clifford(get_gate(name).sequence);
    CHECK(t.symplectic());
  }
}

TEST_CASE("track_clifford failure modes") {
  // A sequence that cannot protect the logical: the handoff has no fix when
  // the next stage anticommutes with everything available.
  GateSequence seq{2, {1}, {1},
                   {stage_of({PauliString("IX")}), stage_of({PauliString("XI")})}};
  // X1 commutes with both stages, but Z1 anticommutes with stage 2 = X1 and
  // multiplying by IX cannot fix qubit 1.
  CHECK_THROWS_AS(track_clifford(seq), HandoffFailure);
}

TEST_CASE("ground_basis product stages") {
  SUBCASE("X2 stage: data qubit free, ancilla in |+>") {
    const Matrix b = ground_basis(stage_of({PauliString("IX")}), {1}, 2);
    REQUIRE(b.cols() == 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(b(0, 0) - r) < 1e-12);  // |0+> = (|00>+|01>)/sqrt2
    CHECK(std::abs(b(1, 0) - r) < 1e-12);
    CHECK(std::abs(b(2, 1) - r) < 1e-12);  // |1+>
    CHECK(std::abs(b(3, 1) - r) < 1e-12);
  }
  SUBCASE("Z1Z2 stage: entangled labels |00>, |11>") {
    const Matrix b = ground_basis(stage_of({PauliString("ZZ")}), {1}, 2);
    CHECK(std::abs(b(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(b(3, 1) - 1.0) < 1e-12);
  }
  SUBCASE("Z2 stage on 3 qubits with data {1,3}") {
    const Matrix b = ground_basis(stage_of({PauliString("IZI")}), {1, 3}, 3);
    REQUIRE(b.cols() == 4);
    // Words 00,01,10,11 -> |000>, |001>, |100>, |101>.
    CHECK(std::abs(b(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(b(1, 1) - 1.0) < 1e-12);
    CHECK(std::abs(b(4, 2) - 1.0) < 1e-12);
    CHECK(std::abs(b(5, 3) - 1.0) < 1e-12);
  }
  SUBCASE("orthonormality") {
    const Matrix b = ground_basis(stage_of({PauliString("IXI"), PauliString("IIX")}), {1}, 3);
    CHECK((b.adjoint() * b - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("degenerate labels are rejected") {
    // Data on the ancilla-like qubit: Z expectation cannot split |0+>,|1+>.
    CHECK_THROWS_AS(ground_basis(stage_of({PauliString("IX")}), {2}, 2), std::runtime_error);
  }
}

TEST_CASE("verify_certificate") {
  SUBCASE("rz(pi/2) certificate matches the S gate") {
    const GateSpec rz = get_gate("rz", std::numbers::pi / 2);
    const auto res = verify_certificate(rz.sequence, rz.rotation_certificate->claims);
    CHECK(res.verified);
  }
  SUBCASE("rz(0) is the identity") {
    const GateSpec rz = get_gate("rz", 0.0);
    const auto res = verify_certificate(
        rz.sequence, {{PauliSum(PauliString("XI")), PauliSum(PauliString("XI"))}});
    CHECK(res.verified);
  }
  SUBCASE("moving X1 to Z2 is refuted") {
    const auto res = verify_certificate(
        move_seq(), {{PauliSum(PauliString("XI")), PauliSum(PauliString("IZ"))}});
    CHECK_FALSE(res.verified);
    CHECK_FALSE(res.trace.empty());
  }
  SUBCASE("generic angles verify") {
    for (double theta : {0.3, 1.1, 2.0, 4.5}) {
      const GateSpec rz = get_gate("rz", theta);
      CHECK(verify_certificate(rz.sequence, rz.rotation_certificate->claims).verified);
    }
  }
}
