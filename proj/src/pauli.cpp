#include "pauliseq/pauli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace pauliseq {

namespace {

int letter_index(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

constexpr char kLetters[] = "IXYZ";

// product_letter[a][b] and phase_quarters[a][b] encode the single-qubit
// products, e.g. X*Y = i Z -> letter Z, phase i^1.
constexpr int kProd[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr int kPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

void check_same_dim(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("Pauli operands act on different qubit counts (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

const Matrix& pauli_matrix(int idx) {
  static const std::array<Matrix, 4> mats = [] {
    std::array<Matrix, 4> m;
    const complexd i(0.0, 1.0);
    m[0] = Matrix::Identity(2, 2);
    m[1] = Matrix{{0, 1}, {1, 0}};
    m[2] = Matrix{{0, -i}, {i, 0}};
    m[3] = Matrix{{1, 0}, {0, -1}};
    return m;
  }();
  return mats[idx];
}

}  // namespace

PauliString::PauliString(std::string letters, int sign)
    : letters_(std::move(letters)), sign_(sign) {
  if (letters_.empty()) throw std::invalid_argument("PauliString needs at least one qubit");
  if (sign_ != 1 && sign_ != -1) {
    throw std::invalid_argument("PauliString sign must be +1 or -1");
  }
  for (char c : letters_) letter_index(c);
}

PauliString PauliString::single(int n_qubits, int qubit, char letter, int sign) {
  if (qubit < 1 || qubit > n_qubits) throw std::invalid_argument("qubit index out of range");
  std::string s(n_qubits, 'I');
  s[qubit - 1] = letter;
  return PauliString(std::move(s), sign);
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(std::string(n_qubits, 'I'));
}

bool PauliString::is_identity() const {
  return letters_.find_first_not_of('I') == std::string::npos;
}

int PauliString::weight() const {
  return static_cast<int>(letters_.size() - std::count(letters_.begin(), letters_.end(), 'I'));
}

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int q = 1; q <= n_qubits(); ++q) {
    if (letters_[q - 1] != 'I') out.push_back(q);
  }
  return out;
}

std::string PauliString::str() const {
  return (sign_ > 0 ? "+" : "-") + letters_;
}

std::string PauliString::str_support() const {
  std::string out = sign_ > 0 ? "+" : "-";
  if (is_identity()) return out + "I";
  for (int q = 1; q <= n_qubits(); ++q) {
    if (letters_[q - 1] != 'I') {
      out += letters_[q - 1];
      out += std::to_string(q);
    }
  }
  return out;
}

PauliString PauliString::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty Pauli string");
  std::size_t pos = 0;
  int sign = +1;
  if (text[0] == '+') {
    pos = 1;
  } else if (text[0] == '-') {
    sign = -1;
    pos = 1;
  }
  if (pos >= text.size()) throw std::invalid_argument("Pauli string '" + text + "' has no letters");
  return PauliString(text.substr(pos), sign);
}

complexd PauliProduct::phase() const {
  static const complexd table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_quarters & 3];
}

PauliString PauliProduct::signed_product() const {
  if (!phase_is_real()) {
    throw std::runtime_error("Pauli product has imaginary phase i^" +
                             std::to_string(phase_quarters));
  }
  return product.with_sign(phase_quarters == 0 ? +1 : -1);
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  check_same_dim(a.n_qubits(), b.n_qubits());
  std::string out(a.n_qubits(), 'I');
  int quarters = 0;
  for (int k = 0; k < a.n_qubits(); ++k) {
    const int ia = letter_index(a.letters()[k]);
    const int ib = letter_index(b.letters()[k]);
    out[k] = kLetters[kProd[ia][ib]];
    quarters += kPhase[ia][ib];
  }
  if (a.sign() < 0) quarters += 2;
  if (b.sign() < 0) quarters += 2;
  return PauliProduct{quarters & 3, PauliString(std::move(out), +1)};
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_dim(a.n_qubits(), b.n_qubits());
  int anti = 0;
  for (int k = 0; k < a.n_qubits(); ++k) {
    const char ca = a.letters()[k];
    const char cb = b.letters()[k];
    if (ca != 'I' && cb != 'I' && ca != cb) ++anti;
  }
  return anti % 2 == 0;
}

PauliSum::PauliSum(const PauliString& s, double coeff) : n_(s.n_qubits()) {
  add(s, coeff);
}

PauliSum& PauliSum::add(const PauliString& s, double coeff) {
  if (n_ == 0) n_ = s.n_qubits();
  check_same_dim(n_, s.n_qubits());
  auto [it, inserted] = terms_.try_emplace(s.letters(), 0.0);
  it->second += coeff * s.sign();
  if (std::abs(it->second) <= kCoeffTol) terms_.erase(it);
  return *this;
}

PauliSum& PauliSum::add(const PauliSum& other, double scale) {
  if (n_ == 0) n_ = other.n_;
  if (!other.empty()) check_same_dim(n_, other.n_);
  for (const auto& [letters, coeff] : other.terms_) {
    add(PauliString(letters), coeff * scale);
  }
  return *this;
}

PauliSum PauliSum::scaled(double factor) const {
  PauliSum out(n_);
  out.add(*this, factor);
  return out;
}

double PauliSum::coeff_norm() const {
  double s = 0.0;
  for (const auto& [_, c] : terms_) s += c * c;
  return std::sqrt(s);
}

bool PauliSum::strings_pairwise_anticommute() const {
  std::vector<const std::string*> keys;
  for (const auto& [letters, _] : terms_) keys.push_back(&letters);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      if (commutes(PauliString(*keys[i]), PauliString(*keys[j]))) return false;
    }
  }
  return true;
}

double PauliSum::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [_, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::string PauliSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [letters, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (coeff == 1.0) {
      os << "+" << letters;
    } else if (coeff == -1.0) {
      os << "-" << letters;
    } else {
      os << coeff << "*" << letters;
    }
  }
  return os.str();
}

bool commutes_sum(const PauliSum& a, const PauliSum& b) {
  if (a.empty() || b.empty()) return true;
  check_same_dim(a.n_qubits(), b.n_qubits());
  // Expand [a, b] term by term; anticommuting string pairs contribute
  // 2 * ca * cb * phase * product, commuting pairs cancel exactly.
  std::map<std::string, complexd> comm;
  double scale = 0.0;
  for (const auto& [la, ca] : a.terms()) {
    PauliString sa(la);
    for (const auto& [lb, cb] : b.terms()) {
      PauliString sb(lb);
      scale = std::max(scale, std::abs(ca * cb));
      if (commutes(sa, sb)) continue;
      PauliProduct p = multiply(sa, sb);
      comm[p.product.letters()] += 2.0 * ca * cb * p.phase();
    }
  }
  const double tol = kCoeffTol * std::max(1.0, scale);
  for (const auto& [_, c] : comm) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

PauliSum multiply_terms(const PauliSum& sum, const PauliString& s) {
  check_same_dim(sum.n_qubits(), s.n_qubits());
  PauliSum out(sum.n_qubits());
  for (const auto& [letters, coeff] : sum.terms()) {
    PauliProduct p = multiply(PauliString(letters), s);
    out.add(p.signed_product(), coeff);
  }
  return out;
}

Matrix matrix_of(const PauliString& s, int max_qubits) {
  if (s.n_qubits() > max_qubits) {
    throw std::invalid_argument("matrix_of: " + std::to_string(s.n_qubits()) +
                                " qubits exceeds the bound of " + std::to_string(max_qubits));
  }
  Matrix m = Matrix::Identity(1, 1);
  for (int k = 0; k < s.n_qubits(); ++k) {
    const Matrix& p = pauli_matrix(letter_index(s.letters()[k]));
    Matrix next(m.rows() * 2, m.cols() * 2);
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        next.block(2 * i, 2 * j, 2, 2) = m(i, j) * p;
      }
    }
    m = std::move(next);
  }
  return static_cast<double>(s.sign()) * m;
}

Matrix matrix_of(const PauliSum& sum, int max_qubits) {
  if (sum.n_qubits() > max_qubits) {
    throw std::invalid_argument("matrix_of: " + std::to_string(sum.n_qubits()) +
                                " qubits exceeds the bound of " + std::to_string(max_qubits));
  }
  const int dim = 1 << sum.n_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [letters, coeff] : sum.terms()) {
    m += coeff * matrix_of(PauliString(letters), max_qubits);
  }
  return m;
}

}  // namespace pauliseq
