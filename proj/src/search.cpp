#include "pauliseq/search.hpp"

#include <algorithm>
#include <unordered_map>

namespace pauliseq {

namespace {

struct StageCandidate {
  StageHamiltonian stage;
  std::vector<PauliString> strings;  // the generators as signed strings
};

/// All weight-1..max_weight letter strings (positive sign) in lexicographic
/// order of the letter sequence.
std::vector<PauliString> enumerate_strings(int n_qubits, int max_weight) {
  std::vector<PauliString> out;
  std::string letters(n_qubits, 'I');
  // Odometer over {I,X,Y,Z}^n in lexicographic order of "IXYZ".
  const char alphabet[] = "IXYZ";
  std::vector<int> digits(n_qubits, 0);
  while (true) {
    for (int q = 0; q < n_qubits; ++q) letters[q] = alphabet[digits[q]];
    PauliString s(letters);
    const int w = s.weight();
    if (w >= 1 && w <= max_weight) out.push_back(s);
    int q = n_qubits - 1;
    while (q >= 0 && ++digits[q] == 4) digits[q--] = 0;
    if (q < 0) break;
  }
  return out;
}

bool supported_off(const PauliString& s, const std::vector<int>& avoid) {
  for (int q : avoid) {
    if (s.letters()[q - 1] != 'I') return false;
  }
  return true;
}

}  // namespace

void SearchConstraints::check() const {
  if (n_qubits < 1 || n_qubits > 4) throw std::invalid_argument("search: n_qubits must be 1..4");
  if (max_weight < 1 || max_weight > 2) throw std::invalid_argument("search: max_weight must be 1..2");
  if (max_stages < 2 || max_stages > 5) throw std::invalid_argument("search: max_stages must be 2..5");
}

std::vector<GateSequence> search_sequences(const LogicalTransformation& target,
                                           const SearchConstraints& constraints) {
  constraints.check();
  const int n = constraints.n_qubits;
  const int m = static_cast<int>(target.in_qubits.size());

  const std::vector<PauliString> strings = enumerate_strings(n, constraints.max_weight);
  std::vector<StageCandidate> stages;
  // Singles first (ground dimension 2^(n-1)), then commuting pairs
  // (dimension 2^(n-2)); only candidates matching 2^m survive.
  if (n - 1 == m) {
    for (const auto& s : strings) {
      stages.push_back({stage_of({s}), {s}});
    }
  }
  if (constraints.allow_pair_stages && n - 2 == m) {
    for (std::size_t i = 0; i < strings.size(); ++i) {
      for (std::size_t j = i + 1; j < strings.size(); ++j) {
        if (commutes(strings[i], strings[j])) {
          stages.push_back({stage_of({strings[i], strings[j]}), {strings[i], strings[j]}});
        }
      }
    }
  }

  const int count = static_cast<int>(stages.size());
  std::vector<char> first_ok(count), last_ok(count);
  for (int i = 0; i < count; ++i) {
    first_ok[i] = std::all_of(stages[i].strings.begin(), stages[i].strings.end(),
                              [&](const PauliString& s) { return supported_off(s, target.in_qubits); });
    last_ok[i] = std::all_of(stages[i].strings.begin(), stages[i].strings.end(),
                             [&](const PauliString& s) { return supported_off(s, target.out_qubits); });
  }

  // Leg legality memo on stage index pairs, computed on the coarse grid.
  std::unordered_map<std::uint64_t, bool> leg_memo;
  auto leg_legal = [&](int a, int b) {
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    auto it = leg_memo.find(key);
    if (it != leg_memo.end()) return it->second;
    GateSequence probe{n, target.in_qubits, target.out_qubits,
                       {stages[a].stage, stages[b].stage}};
    bool ok = false;
    if (!(stages[a].stage == stages[b].stage)) {
      ok = validate_sequence(probe, constraints.leg_grid_points).passed;
    }
    leg_memo.emplace(key, ok);
    return ok;
  };

  std::vector<GateSequence> results;
  std::uint64_t nodes = 0;
  std::vector<int> path;

  auto emit_if_match = [&](const std::vector<int>& seq_idx) {
    GateSequence seq{n, target.in_qubits, target.out_qubits, {}};
    for (int idx : seq_idx) seq.stages.push_back(stages[idx].stage);
    try {
      if (!(track_clifford(seq) == target)) return;
    } catch (const std::exception&) {
      return;
    }
    if (!validate_sequence(seq).passed) return;
    results.push_back(std::move(seq));
  };

  auto dfs = [&](auto&& self, int last_idx) -> void {
    if (results.size() >= constraints.max_results) return;
    if (++nodes > constraints.max_nodes) {
      throw std::runtime_error("search_sequences: node budget exceeded");
    }
    if (static_cast<int>(path.size()) >= 2 && last_ok[last_idx]) {
      emit_if_match(path);
      if (results.size() >= constraints.max_results) return;
    }
    if (static_cast<int>(path.size()) >= constraints.max_stages) return;
    // The last slot can only hold a stage supported off data_out.
    const bool final_slot = static_cast<int>(path.size()) == constraints.max_stages - 1;
    for (int nxt = 0; nxt < count; ++nxt) {
      if (nxt == last_idx) continue;
      if (final_slot && !last_ok[nxt]) continue;
      if (!leg_legal(last_idx, nxt)) continue;
      path.push_back(nxt);
      self(self, nxt);
      path.pop_back();
    }
  };

  for (int first = 0; first < count; ++first) {
    if (!first_ok[first]) continue;
    path.assign(1, first);
    dfs(dfs, first);
  }
  return results;
}

}  // namespace pauliseq
