#include <doctest.h>

#include <random>

#include "pauliseq/pauli.hpp"

using namespace pauliseq;

namespace {

std::vector<PauliString> all_two_qubit_strings() {
  std::vector<PauliString> out;
  for (char a : {'I', 'X', 'Y', 'Z'}) {
    for (char b : {'I', 'X', 'Y', 'Z'}) {
      out.emplace_back(std::string{a, b});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("single-qubit products and phases") {
  auto xx = PauliString("XX");
  auto yy = PauliString("YY");
  auto prod = multiply(xx, yy);
  CHECK(prod.product == PauliString("ZZ"));
  CHECK(prod.phase() == complexd(-1.0, 0.0));

  // Disjoint supports: X1 * X2 on two qubits.
  auto p = multiply(PauliString("XI"), PauliString("IX"));
  CHECK(p.product == PauliString("XX"));
  CHECK(p.phase() == complexd(1.0, 0.0));

  // Involution including signs: (-Y2)(-Y2) = +I.
  auto q = multiply(PauliString("IY", -1), PauliString("IY", -1));
  CHECK(q.product == PauliString("II"));
  CHECK(q.phase() == complexd(1.0, 0.0));
}

TEST_CASE("commutation counting") {
  CHECK_FALSE(commutes(PauliString("IX"), PauliString("ZZ")));
  CHECK(commutes(PauliString("XX"), PauliString("ZZ")));
  CHECK(commutes(PauliString("ZI"), PauliString("IX")));
  CHECK_THROWS_AS(commutes(PauliString("X"), PauliString("XX")), std::invalid_argument);
}

TEST_CASE("matrix_of single letters") {
  Matrix z = matrix_of(PauliString("Z"));
  CHECK(z(0, 0) == complexd(1, 0));
  CHECK(z(1, 1) == complexd(-1, 0));
  Matrix x = matrix_of(PauliString("X"));
  CHECK(x(0, 1) == complexd(1, 0));
  CHECK(x(1, 0) == complexd(1, 0));
  Matrix zz = matrix_of(PauliString("ZZ"));
  CHECK(zz(0, 0) == complexd(1, 0));
  CHECK(zz(1, 1) == complexd(-1, 0));
  CHECK(zz(2, 2) == complexd(-1, 0));
  CHECK(zz(3, 3) == complexd(1, 0));
}

TEST_CASE("exhaustive 2-qubit multiply matches dense matrices exactly") {
  const auto strings = all_two_qubit_strings();
  for (const auto& a : strings) {
    for (const auto& b : strings) {
      const auto prod = multiply(a, b);
      const Matrix lhs = matrix_of(a) * matrix_of(b);
      const Matrix rhs = prod.phase() * matrix_of(prod.product);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
      // Commuting pairs have real phase; anticommuting pairs imaginary.
      CHECK(prod.phase_is_real() == commutes(a, b));
      // multiply(a,b) and multiply(b,a) differ by (-1)^anticommute.
      const auto rev = multiply(b, a);
      const int diff = ((prod.phase_quarters - rev.phase_quarters) % 4 + 4) % 4;
      CHECK(diff == (commutes(a, b) ? 0 : 2));
    }
  }
}

TEST_CASE("string rendering round-trips") {
  for (const char* text : {"+XIZ", "-YI", "+I", "-XXXX"}) {
    CHECK(PauliString::parse(text).str() == text);
  }
  CHECK(PauliString::parse("XIZ") == PauliString("XIZ"));
  CHECK(PauliString::parse("-YI").str_support() == "-Y1");
  CHECK(PauliString("ZZI").str_support() == "+Z1Z2");
  CHECK_THROWS_AS(PauliString::parse("+F"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
}

TEST_CASE("PauliSum folds signs and drops zero terms") {
  PauliSum s(2);
  s.add(PauliString("XI", -1), 2.0);
  CHECK(s.terms().at("XI") == -2.0);
  s.add(PauliString("XI"), 2.0);
  CHECK(s.empty());

  PauliSum t(PauliString("IX"), 0.5);
  t.add(PauliString("IY"), -0.25);
  CHECK(t.size() == 2);
  CHECK(t.coeff_norm() == doctest::Approx(std::sqrt(0.25 + 0.0625)));
  CHECK(t.strings_pairwise_anticommute());
  t.add(PauliString("II"), 1.0);
  CHECK_FALSE(t.strings_pairwise_anticommute());
}

TEST_CASE("commutes_sum handles coefficient cancellation") {
  const double theta = std::numbers::pi / 3;
  PauliSum a(PauliString("XX"), std::cos(theta));
  a.add(PauliString("XY"), -std::sin(theta));
  PauliSum b(PauliString("IX"), std::cos(theta));
  b.add(PauliString("IY"), -std::sin(theta));
  CHECK(commutes_sum(a, b));
  // Numerical oracle: dense commutator norm.
  const Matrix ma = matrix_of(a);
  const Matrix mb = matrix_of(b);
  CHECK((ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_FALSE(commutes_sum(PauliSum(PauliString("XI")), PauliSum(PauliString("ZZ"))));
  CHECK(commutes_sum(PauliSum(PauliString("XI")), PauliSum(2)));  // zero operator
}

TEST_CASE("commutes_sum agrees with the dense commutator on random sums") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const char alphabet[] = "IXYZ";
  for (int trial = 0; trial < 200; ++trial) {
    PauliSum a(2), b(2);
    for (int t = 0; t < 3; ++t) {
      std::string la{alphabet[letter(rng)], alphabet[letter(rng)]};
      std::string lb{alphabet[letter(rng)], alphabet[letter(rng)]};
      a.add(PauliString(la), coeff(rng));
      b.add(PauliString(lb), coeff(rng));
    }
    const Matrix ma = matrix_of(a);
    const Matrix mb = matrix_of(b);
    const double norm = (ma * mb - mb * ma).cwiseAbs().maxCoeff();
    CHECK(commutes_sum(a, b) == (norm < 1e-12));
  }
}

TEST_CASE("matrix_of PauliSum is Hermitian and bounded") {
  PauliSum s(PauliString("XX"), 0.3);
  s.add(PauliString("ZI"), -1.2);
  const Matrix m = matrix_of(s);
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(matrix_of(PauliString("XXXXX")), std::invalid_argument);
}

TEST_CASE("multiply_terms rejects imaginary phases") {
  PauliSum s(PauliString("XI"));
  CHECK(multiply_terms(s, PauliString("IX")).terms().count("XX") == 1);
  CHECK_THROWS(multiply_terms(PauliSum(PauliString("XI")), PauliString("ZI")));
}
