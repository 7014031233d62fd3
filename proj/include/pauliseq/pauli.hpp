#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pauliseq {

using complexd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Coefficients smaller than this are treated as exact zeros when sums are
/// collected into canonical form.
inline constexpr double kCoeffTol = 1e-12;

/// Default cap on the qubit count for dense-matrix realization (2^4 = 16).
inline constexpr int kDefaultMatrixQubits = 4;

/// Signed tensor product of single-qubit Pauli operators.
///
/// Letters are stored as a string over "IXYZ", one character per qubit
/// (qubit 1 is the leftmost letter and the most significant factor in the
/// Kronecker product). The overall sign is restricted to +/-1; imaginary
/// phases only appear transiently in multiplication results.
class PauliString {
 public:
  PauliString() = default;
  PauliString(std::string letters, int sign = +1);

  /// Single non-identity letter at `qubit` (1-based) on an n-qubit register.
  static PauliString single(int n_qubits, int qubit, char letter, int sign = +1);
  /// Identity on n qubits.
  static PauliString identity(int n_qubits);

  int n_qubits() const { return static_cast<int>(letters_.size()); }
  const std::string& letters() const { return letters_; }
  char letter(int qubit) const { return letters_.at(qubit - 1); }
  int sign() const { return sign_; }
  PauliString with_sign(int sign) const { return PauliString(letters_, sign); }

  bool is_identity() const;
  int weight() const;
  /// 1-based qubit indices with a non-identity letter.
  std::vector<int> support() const;

  /// "+XIZ" / "-YI" form; the sign is always printed so rendering round-trips.
  std::string str() const;
  /// "+X1X3" form used in reports; identity renders as "+I".
  std::string str_support() const;
  /// Parses the str() form. A missing sign means +.
  static PauliString parse(const std::string& text);

  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  std::string letters_;
  int sign_ = +1;
};

/// Result of a Pauli string product: phase * product with product.sign == +1
/// and phase = i^phase_quarters.
struct PauliProduct {
  int phase_quarters = 0;  // product phase is i^phase_quarters, in {0,1,2,3}
  PauliString product;

  complexd phase() const;
  bool phase_is_real() const { return phase_quarters % 2 == 0; }
  /// The product as a signed string; throws if the phase is imaginary.
  PauliString signed_product() const;
};

/// Exact product a*b with the phase factored out of the returned string.
PauliProduct multiply(const PauliString& a, const PauliString& b);

/// True iff a and b commute (even number of positions where the letters
/// differ and neither is I). Signs are irrelevant.
bool commutes(const PauliString& a, const PauliString& b);

/// Real linear combination of unsigned Pauli letter-sequences. String signs
/// are folded into the coefficients, so each letter-sequence appears at most
/// once and never with an exactly-zero coefficient.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_(n_qubits) {}
  /// Single-term sum coeff * string (string sign folded in).
  PauliSum(const PauliString& s, double coeff = 1.0);

  int n_qubits() const { return n_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<std::string, double>& terms() const { return terms_; }

  PauliSum& add(const PauliString& s, double coeff = 1.0);
  PauliSum& add(const PauliSum& other, double scale = 1.0);
  PauliSum scaled(double factor) const;

  /// Euclidean norm of the coefficient vector.
  double coeff_norm() const;
  /// True iff every pair of distinct letter-sequences anticommutes.
  bool strings_pairwise_anticommute() const;
  double max_abs_coeff() const;

  std::string str() const;

  friend bool operator==(const PauliSum& a, const PauliSum& b) = default;

 private:
  int n_ = 0;
  std::map<std::string, double> terms_;
};

/// True iff the symbolic commutator [a, b] collapses to zero after exact
/// term collection (tolerance kCoeffTol relative to the largest coefficient).
bool commutes_sum(const PauliSum& a, const PauliSum& b);

/// Right-multiplies every term of `sum` by the signed string `s`. Each
/// per-term phase must come out real; imaginary phases throw.
PauliSum multiply_terms(const PauliSum& sum, const PauliString& s);

/// Dense 2^n x 2^n realization. Guarded by max_qubits (resource bound).
Matrix matrix_of(const PauliString& s, int max_qubits = kDefaultMatrixQubits);
Matrix matrix_of(const PauliSum& sum, int max_qubits = kDefaultMatrixQubits);

}  // namespace pauliseq
