#include "pauliseq/flow.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace pauliseq {

namespace {

Matrix stage_matrix(const StageHamiltonian& st, int n_qubits) {
  Matrix m = Matrix::Zero(1 << n_qubits, 1 << n_qubits);
  for (const auto& g : st.generators) m += matrix_of(g);
  return -0.5 * m;
}

int count_ground(const Eigen::VectorXd& evals) {
  int dim = 1;
  while (dim < evals.size() && evals[dim] - evals[0] < kGapTol) ++dim;
  return dim;
}

bool is_clifford_stage(const StageHamiltonian& st) {
  return std::all_of(st.generators.begin(), st.generators.end(),
                     [](const PauliSum& g) { return g.size() == 1; });
}

/// Single signed strings of a Clifford stage.
std::vector<PauliString> stage_strings(const StageHamiltonian& st) {
  std::vector<PauliString> out;
  for (const auto& g : st.generators) {
    const auto& [letters, coeff] = *g.terms().begin();
    out.emplace_back(letters, coeff > 0 ? +1 : -1);
  }
  return out;
}

/// Product of the generators selected by the bits of `mask`, low bit first.
/// Throws PhaseFailure if an imaginary phase accumulates.
PauliString subset_product(const std::vector<PauliString>& gens, unsigned mask, int n_qubits) {
  PauliString acc = PauliString::identity(n_qubits);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (mask & (1u << k)) {
      PauliProduct p = multiply(acc, gens[k]);
      if (!p.phase_is_real()) {
        throw PhaseFailure("stage generator subset product has imaginary phase");
      }
      acc = p.signed_product();
    }
  }
  return acc;
}

bool commutes_with_all(const PauliString& rep, const std::vector<PauliString>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const PauliString& g) { return commutes(rep, g); });
}

bool commutes_with_all_sums(const PauliSum& rep, const std::vector<PauliSum>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const PauliSum& g) { return commutes_sum(rep, g); });
}

bool supported_on(const PauliString& s, const std::vector<int>& qubits) {
  for (int q = 1; q <= s.n_qubits(); ++q) {
    if (s.letters()[q - 1] != 'I' &&
        std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string ValidationReport::str() const {
  std::ostringstream os;
  os << (passed ? "PASS" : "FAIL") << "\n";
  os << "  ground dims: [";
  for (std::size_t i = 0; i < ground_dims.size(); ++i) {
    os << (i ? ", " : "") << ground_dims[i];
  }
  os << "]\n  leg min gaps: [";
  for (std::size_t i = 0; i < legs.size(); ++i) {
    os << (i ? ", " : "") << legs[i].min_gap;
  }
  os << "]\n";
  for (const auto& f : failures) os << "  ! " << f << "\n";
  return os.str();
}

ValidationReport validate_sequence(const GateSequence& seq, int grid_points) {
  seq.check_structure();
  if (seq.n_qubits > kDefaultMatrixQubits) {
    throw std::invalid_argument("validate_sequence: qubit bound exceeded");
  }
  ValidationReport rep;
  const int want_dim = 1 << seq.n_data();

  std::vector<Matrix> mats;
  for (int i = 0; i < seq.n_stages(); ++i) {
    const auto& st = seq.stages[i];

    bool comm_ok = true;
    for (std::size_t a = 0; a < st.generators.size() && comm_ok; ++a) {
      for (std::size_t b = a + 1; b < st.generators.size(); ++b) {
        if (!commutes_sum(st.generators[a], st.generators[b])) {
          comm_ok = false;
          rep.failures.push_back("stage " + std::to_string(i + 1) +
                                 ": generators do not commute");
          break;
        }
      }
    }
    rep.stage_generators_commute.push_back(comm_ok);

    bool canon_ok = true;
    if (st.canonical) {
      for (const auto& g : st.generators) {
        if (!g.strings_pairwise_anticommute()) {
          canon_ok = false;
          rep.failures.push_back("stage " + std::to_string(i + 1) +
                                 ": canonical generator strings do not pairwise anticommute");
        } else if (std::abs(g.coeff_norm() - 1.0) > 1e-9) {
          canon_ok = false;
          rep.failures.push_back("stage " + std::to_string(i + 1) +
                                 ": canonical generator norm != 1");
        }
      }
    }
    rep.stage_canonical_ok.push_back(canon_ok);

    mats.push_back(stage_matrix(st, seq.n_qubits));
    Eigen::SelfAdjointEigenSolver<Matrix> es(mats.back(), Eigen::EigenvaluesOnly);
    const int gdim = count_ground(es.eigenvalues());
    rep.ground_dims.push_back(gdim);
    if (gdim != want_dim) {
      rep.failures.push_back("stage " + std::to_string(i + 1) + ": ground dimension " +
                             std::to_string(gdim) + " != " + std::to_string(want_dim));
    }
  }

  for (int leg = 0; leg < seq.n_legs(); ++leg) {
    LegReport lr;
    lr.min_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid_points; ++k) {
      const double s = static_cast<double>(k) / (grid_points - 1);
      const double ca = std::cos(s * std::numbers::pi / 2);
      const double cb = std::sin(s * std::numbers::pi / 2);
      Matrix h = ca * mats[leg] + cb * mats[leg + 1];
      Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
      const auto& ev = es.eigenvalues();
      lr.min_gap = std::min(lr.min_gap, ev[want_dim] - ev[0]);
      lr.max_ground_split = std::max(lr.max_ground_split, ev[want_dim - 1] - ev[0]);
    }
    rep.legs.push_back(lr);
    if (lr.min_gap < kGapTol) {
      rep.failures.push_back("leg " + std::to_string(leg + 1) + ": min gap " +
                             std::to_string(lr.min_gap) + " below threshold");
    }
    // The protected multiplet must stay degenerate for the whole crossfade.
    if (lr.max_ground_split > kGapTol) {
      rep.failures.push_back("leg " + std::to_string(leg + 1) + ": ground space splits by " +
                             std::to_string(lr.max_ground_split) + " mid-leg");
    }
  }

  rep.passed = rep.failures.empty();
  return rep;
}

bool LogicalTransformation::symplectic() const {
  const std::size_t m = x_images.size();
  if (z_images.size() != m) return false;
  auto img = [&](std::size_t a) -> const PauliString& {
    return a < m ? x_images[a] : z_images[a - m];
  };
  // Inputs X_k, Z_k: pairs (X_k, Z_k) anticommute, everything else commutes.
  for (std::size_t a = 0; a < 2 * m; ++a) {
    for (std::size_t b = a + 1; b < 2 * m; ++b) {
      const bool want_anti = (b == a + m);
      if (commutes(img(a), img(b)) == want_anti) return false;
    }
  }
  return true;
}

PauliString LogicalTransformation::logical_image(const PauliString& full) const {
  std::string letters;
  for (int q : out_qubits) letters += full.letters()[q - 1];
  if (!supported_on(full, out_qubits)) {
    throw std::logic_error("image " + full.str_support() + " has support off the output qubits");
  }
  return PauliString(letters, full.sign());
}

std::string LogicalTransformation::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < x_images.size(); ++k) {
    if (k) os << ", ";
    os << "X" << in_qubits[k] << " -> " << x_images[k].str_support();
    os << ", Z" << in_qubits[k] << " -> " << z_images[k].str_support();
  }
  return os.str();
}

LogicalTransformation track_clifford(const GateSequence& seq) {
  seq.check_structure();
  std::vector<std::vector<PauliString>> gens;
  for (const auto& st : seq.stages) {
    if (!is_clifford_stage(st)) {
      throw std::invalid_argument("track_clifford requires single-string stage generators");
    }
    gens.push_back(stage_strings(st));
  }

  auto track_one = [&](const PauliString& initial, const std::string& label) {
    PauliString rep = initial;
    for (int leg = 0; leg < seq.n_legs(); ++leg) {
      const auto& cur = gens[leg];
      const auto& nxt = gens[leg + 1];
      const unsigned n_subsets = 1u << cur.size();
      bool fixed = false;
      bool saw_imaginary = false;
      for (unsigned mask = 0; mask < n_subsets; ++mask) {
        PauliString prod = subset_product(cur, mask, seq.n_qubits);
        PauliProduct cand = multiply(rep, prod);
        if (!cand.phase_is_real()) {
          saw_imaginary = true;
          continue;
        }
        PauliString c = cand.signed_product();
        if (commutes_with_all(c, cur) && commutes_with_all(c, nxt)) {
          rep = c;
          fixed = true;
          break;
        }
      }
      if (!fixed) {
        if (saw_imaginary) {
          throw PhaseFailure("logical " + label + ", leg " + std::to_string(leg + 1) +
                             ": only imaginary-phase products restore commutation");
        }
        throw HandoffFailure("logical " + label + ", leg " + std::to_string(leg + 1) +
                             ": no current-stage subset product commutes with the next stage");
      }
    }
    // Confine support to the output data qubits modulo the final stage group.
    const auto& last = gens.back();
    const unsigned n_subsets = 1u << last.size();
    for (unsigned mask = 0; mask < n_subsets; ++mask) {
      PauliString prod = subset_product(last, mask, seq.n_qubits);
      PauliProduct cand = multiply(rep, prod);
      if (!cand.phase_is_real()) continue;
      PauliString c = cand.signed_product();
      if (supported_on(c, seq.data_out)) return c;
    }
    throw ReductionFailure("logical " + label +
                           ": support cannot be confined to the output qubits");
  };

  LogicalTransformation out;
  out.in_qubits = seq.data_in;
  out.out_qubits = seq.data_out;
  for (int q : seq.data_in) {
    out.x_images.push_back(track_one(PauliString::single(seq.n_qubits, q, 'X'), "X" + std::to_string(q)));
    out.z_images.push_back(track_one(PauliString::single(seq.n_qubits, q, 'Z'), "Z" + std::to_string(q)));
  }
  if (!out.symplectic()) {
    throw HandoffFailure("tracked images violate the symplectic form");
  }
  return out;
}

Matrix ground_projector(const StageHamiltonian& stage, int n_qubits) {
  Matrix h = stage_matrix(stage, n_qubits);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& ev = es.eigenvalues();
  const int gdim = count_ground(ev);
  Matrix v = es.eigenvectors().leftCols(gdim);
  return v * v.adjoint();
}

Matrix ground_basis(const StageHamiltonian& stage, const std::vector<int>& data_qubits,
                    int n_qubits) {
  const int dim = 1 << n_qubits;
  const int m = static_cast<int>(data_qubits.size());
  const int d = 1 << m;
  Matrix h = stage_matrix(stage, n_qubits);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& ev = es.eigenvalues();
  const int gdim = count_ground(ev);
  if (gdim != d) {
    throw std::runtime_error("ground dimension " + std::to_string(gdim) + " != 2^#data = " +
                             std::to_string(d));
  }
  Matrix v = es.eigenvectors().leftCols(gdim);
  Matrix proj = v * v.adjoint();

  Matrix basis(dim, d);
  for (int w = 0; w < d; ++w) {
    // Projector onto the computational sector where data qubit k (MSB first)
    // carries bit k of w, acting as identity elsewhere.
    Eigen::VectorXd sector = Eigen::VectorXd::Ones(dim);
    for (int k = 0; k < m; ++k) {
      const int bit = (w >> (m - 1 - k)) & 1;
      const int q = data_qubits[k];
      for (int idx = 0; idx < dim; ++idx) {
        const int qbit = (idx >> (n_qubits - q)) & 1;
        if (qbit != bit) sector[idx] = 0.0;
      }
    }
    Matrix pw = proj * sector.asDiagonal() * proj;
    Eigen::SelfAdjointEigenSolver<Matrix> sector_es(pw);
    const auto& sev = sector_es.eigenvalues();
    const double top = sev[dim - 1];
    if (top < 0.5 || (dim >= 2 && sev[dim - 2] > top - 0.5)) {
      throw std::runtime_error(
          "data-qubit computational labels do not distinguish the ground states");
    }
    Vector vec = sector_es.eigenvectors().col(dim - 1);
    // Largest-magnitude amplitude real positive; ties broken by lowest index.
    int best = 0;
    double best_mag = 0.0;
    for (int idx = 0; idx < dim; ++idx) {
      const double mag = std::abs(vec[idx]);
      if (mag > best_mag + 1e-12) {
        best_mag = mag;
        best = idx;
      }
    }
    vec *= std::conj(vec[best]) / std::abs(vec[best]);
    basis.col(w) = vec;
  }
  return basis;
}

namespace {

/// Embeds an operator given on the full register (support restricted to
/// `qubits`) — claims are written on full-width strings already.
Matrix claim_matrix(const PauliSum& op) { return matrix_of(op); }

}  // namespace

CertificateResult verify_certificate(const GateSequence& seq,
                                     const std::vector<CertificateClaim>& claims) {
  CertificateResult result;
  result.verified = true;

  std::vector<std::vector<PauliSum>> stage_gens;
  std::vector<std::vector<PauliString>> stage_group;  // single-string stages only
  for (const auto& st : seq.stages) {
    stage_gens.push_back(st.generators);
    stage_group.push_back(is_clifford_stage(st) ? stage_strings(st)
                                                : std::vector<PauliString>{});
  }
  Matrix p_first = ground_projector(seq.stages.front(), seq.n_qubits);
  Matrix p_last = ground_projector(seq.stages.back(), seq.n_qubits);

  for (std::size_t ci = 0; ci < claims.size(); ++ci) {
    const auto& claim = claims[ci];
    std::string label = "claim " + std::to_string(ci + 1);
    auto fail = [&](const std::string& why) {
      result.verified = false;
      result.trace.push_back(label + ": FAIL - " + why);
    };

    // Extend the input into a leg-1 representative, then hand off leg by leg.
    // Each extension right-multiplies individual terms by subset products of
    // the current stage's generators; those act as +1 on the stage's ground
    // space, so ground actions match along the chain by construction.
    PauliSum rep = claim.input;
    std::optional<PauliSum> first_rep;
    bool chain_ok = true;
    for (int leg = 0; leg < seq.n_legs() && chain_ok; ++leg) {
      const auto& group = stage_group[leg];
      const auto& cur = stage_gens[leg];
      const auto& nxt = stage_gens[leg + 1];
      if (commutes_with_all_sums(rep, cur) && commutes_with_all_sums(rep, nxt)) {
        if (!first_rep) first_rep = rep;
        continue;  // already a valid representative for this leg
      }
      if (group.empty()) {
        fail("leg " + std::to_string(leg + 1) +
             ": representative does not commute and the stage has sum generators (no "
             "string group to extend with)");
        chain_ok = false;
        break;
      }
      // Per-term subset choice, enumerated in binary counting order over
      // (subsets)^(terms); first success wins.
      std::vector<PauliString> terms;
      std::vector<double> coeffs;
      for (const auto& [letters, c] : rep.terms()) {
        terms.emplace_back(letters);
        coeffs.push_back(c);
      }
      const unsigned n_subsets = 1u << group.size();
      std::uint64_t combos = 1;
      for (std::size_t t = 0; t < terms.size(); ++t) combos *= n_subsets;
      bool fixed = false;
      for (std::uint64_t combo = 0; combo < combos && !fixed; ++combo) {
        PauliSum cand(seq.n_qubits);
        std::uint64_t rem = combo;
        bool ok = true;
        for (std::size_t t = 0; t < terms.size(); ++t) {
          const unsigned mask = rem % n_subsets;
          rem /= n_subsets;
          PauliString prod = subset_product(group, mask, seq.n_qubits);
          PauliProduct p = multiply(terms[t], prod);
          if (!p.phase_is_real()) {
            ok = false;
            break;
          }
          cand.add(p.signed_product(), coeffs[t]);
        }
        if (!ok) continue;
        if (commutes_with_all_sums(cand, cur) && commutes_with_all_sums(cand, nxt)) {
          rep = cand;
          fixed = true;
        }
      }
      if (!fixed) {
        fail("leg " + std::to_string(leg + 1) + ": no generator extension restores commutation");
        chain_ok = false;
      }
      if (!first_rep) first_rep = rep;
    }
    if (!chain_ok) continue;

    // The first leg's representative must act like the input on the first
    // ground space; the last leg's like the output on the final one.
    Matrix in_mat = claim_matrix(claim.input);
    Matrix out_mat = claim_matrix(claim.output);
    Matrix rep_mat = matrix_of(rep);
    const double in_err =
        (p_first * (matrix_of(first_rep.value_or(rep)) - in_mat) * p_first).norm();
    const double out_err = (p_last * (rep_mat - out_mat) * p_last).norm();
    if (in_err > 1e-9) {
      fail("representative deviates from the input on the first ground space (" +
           std::to_string(in_err) + ")");
      continue;
    }
    if (out_err > 1e-9) {
      fail("final representative " + rep.str() +
           " deviates from the claimed output on the last ground space (" +
           std::to_string(out_err) + ")");
      continue;
    }
    result.trace.push_back(label + ": OK via " + rep.str());
  }
  return result;
}

}  // namespace pauliseq
