#include "pauliseq/sequence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pauliseq {

PauliSum StageHamiltonian::total() const {
  PauliSum t;
  for (const auto& g : generators) t.add(g);
  return t;
}

int StageHamiltonian::n_qubits() const {
  return generators.empty() ? 0 : generators.front().n_qubits();
}

bool operator==(const StageHamiltonian& a, const StageHamiltonian& b) {
  // Generator order within a stage carries no meaning (one shared envelope).
  if (a.generators.size() != b.generators.size()) return false;
  auto key = [](const StageHamiltonian& st) {
    std::vector<std::string> k;
    for (const auto& g : st.generators) k.push_back(g.str());
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(a) == key(b);
}

StageHamiltonian stage_of(std::initializer_list<PauliString> gens) {
  StageHamiltonian st;
  for (const auto& g : gens) st.generators.emplace_back(g);
  return st;
}

StageHamiltonian stage_of_sums(std::initializer_list<PauliSum> gens) {
  StageHamiltonian st;
  for (const auto& g : gens) st.generators.push_back(g);
  return st;
}

void GateSequence::check_structure() const {
  if (n_qubits < 1) throw std::invalid_argument("sequence has no qubits");
  if (stages.size() < 2) throw std::invalid_argument("sequence needs at least 2 stages");
  if (data_in.empty() || data_in.size() != data_out.size()) {
    throw std::invalid_argument("data_in/data_out must be nonempty and equal length");
  }
  auto check_qubits = [&](const std::vector<int>& qs, const char* what) {
    std::set<int> seen;
    for (int q : qs) {
      if (q < 1 || q > n_qubits) {
        throw std::invalid_argument(std::string(what) + " qubit index out of range");
      }
      if (!seen.insert(q).second) {
        throw std::invalid_argument(std::string(what) + " qubit listed twice");
      }
    }
  };
  check_qubits(data_in, "data_in");
  check_qubits(data_out, "data_out");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (stages[i].generators.empty()) {
      throw std::invalid_argument("stage " + std::to_string(i + 1) + " has no generators");
    }
    for (const auto& g : stages[i].generators) {
      if (g.n_qubits() != n_qubits) {
        throw std::invalid_argument("stage " + std::to_string(i + 1) +
                                    " generator qubit count mismatch");
      }
      if (g.empty()) {
        throw std::invalid_argument("stage " + std::to_string(i + 1) + " has an empty generator");
      }
    }
    if (i > 0 && stages[i] == stages[i - 1]) {
      throw std::invalid_argument("consecutive stages " + std::to_string(i) + "," +
                                  std::to_string(i + 1) + " are identical");
    }
  }
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s, int line_no) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": bad qubit list '" + s + "'");
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": empty qubit list");
  }
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string render_generator(const PauliSum& g) {
  if (g.size() == 1) {
    const auto& [letters, coeff] = *g.terms().begin();
    if (coeff == 1.0) return "+" + letters;
    if (coeff == -1.0) return "-" + letters;
  }
  return g.str();  // display-only coefficient form
}

}  // namespace

std::string render_sequence(const GateSequence& seq) {
  std::ostringstream os;
  if (!seq.name.empty()) os << "name: " << seq.name << "\n";
  os << "data_in: " << join_ints(seq.data_in) << "\n";
  os << "data_out: " << join_ints(seq.data_out) << "\n";
  for (const auto& st : seq.stages) {
    for (std::size_t i = 0; i < st.generators.size(); ++i) {
      if (i) os << " + ";
      os << render_generator(st.generators[i]);
    }
    os << "\n";
  }
  return os.str();
}

GateSequence parse_sequence(const std::string& text) {
  GateSequence seq;
  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (auto colon = line.find(':'); colon != std::string::npos) {
      std::string key = trim(line.substr(0, colon));
      std::string value = trim(line.substr(colon + 1));
      if (key == "name") {
        seq.name = value;
      } else if (key == "data_in") {
        seq.data_in = parse_ints(value, line_no);
      } else if (key == "data_out") {
        seq.data_out = parse_ints(value, line_no);
      } else {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": unknown directive '" + key + "'");
      }
      continue;
    }

    StageHamiltonian st;
    std::stringstream ss(line);
    std::string tok;
    bool expect_string = true;
    while (ss >> tok) {
      if (!expect_string) {
        if (tok != "+") {
          throw std::invalid_argument("line " + std::to_string(line_no) +
                                      ": expected '+' between generators, got '" + tok + "'");
        }
        expect_string = true;
        continue;
      }
      PauliString ps = [&] {
        try {
          return PauliString::parse(tok);
        } catch (const std::exception& e) {
          throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
      }();
      st.generators.emplace_back(ps);
      expect_string = false;
    }
    if (expect_string) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": dangling '+'");
    }
    if (seq.n_qubits == 0) {
      seq.n_qubits = st.n_qubits();
    } else if (st.n_qubits() != seq.n_qubits) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": stage qubit count differs from earlier stages");
    }
    seq.stages.push_back(std::move(st));
  }
  seq.check_structure();
  return seq;
}

}  // namespace pauliseq
