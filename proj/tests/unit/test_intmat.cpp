#include <map>

#include "doctest.h"
#include "rinf/errors.hpp"
#include "rinf/intmat.hpp"
#include "support.hpp"

using namespace rinf;
using namespace testing_support;

namespace {

// det(tI - A) at t = 0..n by Leibniz; n + 1 values pin a degree-n polynomial.
void check_char_poly_against_leibniz(const IntMatrix& a) {
  const IntPolynomial p = char_poly(a);
  const std::size_t n = a.rows();
  REQUIRE(p.degree() == static_cast<int>(n));
  CHECK(p.is_monic());
  for (long t = 0; t <= static_cast<long>(n); ++t) {
    IntMatrix shifted(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? Integer(t) : Integer(0)) - a(i, j);
    CHECK(p(Integer(t)) == leibniz_det(shifted));
  }
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

// Symmetric power by expanding products of linear forms, basis in map order.
IntMatrix sym_power_by_expansion(const IntMatrix& a, unsigned k) {
  using Mono = std::vector<int>;
  const std::size_t n = a.rows();
  std::vector<Mono> monos;
  Mono e(n, 0);
  std::function<void(std::size_t, int)> gen = [&](std::size_t pos, int left) {
    if (pos + 1 == n) {
      e[pos] = left;
      monos.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[pos] = v;
      gen(pos + 1, left - v);
    }
  };
  gen(0, static_cast<int>(k));
  std::map<Mono, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  IntMatrix out(monos.size(), monos.size());
  for (std::size_t col = 0; col < monos.size(); ++col) {
    std::map<Mono, Integer> poly{{Mono(n, 0), 1}};
    for (std::size_t var = 0; var < n; ++var)
      for (int rep = 0; rep < monos[col][var]; ++rep) {
        std::map<Mono, Integer> next;
        for (const auto& [m, c] : poly)
          for (std::size_t j = 0; j < n; ++j) {
            if (a(j, var) == 0) continue;
            Mono m2 = m;
            ++m2[j];
            next[m2] += c * a(j, var);
          }
        poly = std::move(next);
      }
    for (const auto& [m, c] : poly) out(index.at(m), col) = c;
  }
  return out;
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(det(IntMatrix::identity(3)) == 1);
  CHECK(det(IntMatrix{{0, 1}, {1, 3}}) == -1);
  CHECK(det(IntMatrix{{1, 1}, {-1, 1}}) == 2);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), InputError);
}

TEST_CASE("determinant against Leibniz expansion") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(1, 6));
    const IntMatrix a = random_matrix(n, -9, 9);
    const Integer expected = leibniz_det(a);
    CHECK(det_bareiss(a) == expected);
    CHECK(det_multimodular(a) == expected);
    CHECK(is_singular(a) == (expected == 0));
  }
  // singular with a repeated row
  IntMatrix s = random_matrix(5, -5, 5);
  for (std::size_t j = 0; j < 5; ++j) s(4, j) = s(1, j) * 3;
  CHECK(det_multimodular(s) == 0);
  CHECK(is_singular(s));
  CHECK(rank(s) == 4);
}

TEST_CASE("large determinants: multimodular agrees with Bareiss") {
  for (int trial = 0; trial < 5; ++trial) {
    const IntMatrix a = random_matrix(30, -1000000, 1000000);
    CHECK(det_multimodular(a) == det_bareiss(a));
  }
  // entries far beyond 64 bits
  IntMatrix big = random_matrix(12, -100, 100);
  for (std::size_t i = 0; i < 12; ++i) big(i, i) *= Integer("123456789012345678901234567890");
  CHECK(det_multimodular(big) == det_bareiss(big));
}

TEST_CASE("characteristic polynomial") {
  const IntPolynomial p{-1, -3, 1};
  CHECK(char_poly(companion(p)) == p);
  CHECK(char_poly(IntMatrix::identity(2)) == IntPolynomial{1, -2, 1});
  CHECK(char_poly(IntMatrix{{0, -1}, {1, 0}}) == IntPolynomial{1, 0, 1});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(1, 6));
    const IntMatrix a = random_matrix(n, -6, 6);
    check_char_poly_against_leibniz(a);
    const Integer sign = n % 2 ? -1 : 1;
    CHECK(det(a) == sign * char_poly(a).coeff(0));
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> c;
    const long d = uniform(1, 8);
    for (long k = 0; k < d; ++k) c.push_back(uniform(-20, 20));
    c.push_back(1);
    const IntPolynomial q(c);
    CHECK(char_poly(companion(q)) == q);
  }
}

TEST_CASE("companion convention") {
  CHECK(companion(IntPolynomial{-1, -3, 1}) == IntMatrix{{0, 1}, {1, 3}});
  CHECK(companion(IntPolynomial{-1, 1}) == IntMatrix{{1}});
  CHECK(companion(IntPolynomial{1, 1}) == IntMatrix{{-1}});
  CHECK_THROWS_AS(companion(IntPolynomial{1, 2}), InputError);
}

TEST_CASE("Smith normal form") {
  auto diag = [](const IntMatrix& a) { return smith_normal_form(a).diagonal; };
  CHECK(diag(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(diag(IntMatrix::identity(3)) == std::vector<Integer>{1, 1, 1});
  CHECK(diag(IntMatrix(2, 2)) == std::vector<Integer>{0, 0});
  CHECK(cokernel_order(IntMatrix{{1, 1}, {-1, 1}}) == 2);
  CHECK(cokernel_order(IntMatrix{{1, 2}, {2, 4}}) == 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(uniform(1, 5));
    const auto cols = static_cast<std::size_t>(uniform(1, 5));
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = uniform(-8, 8);
    const SmithForm s = smith_normal_form(a);
    const IntMatrix d = s.left * a * s.right;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) CHECK(d(i, j) == (i == j ? s.diagonal[i] : Integer(0)));
    CHECK(abs(det(s.left)) == 1);
    CHECK(abs(det(s.right)) == 1);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      CHECK(s.diagonal[i] >= 0);
      if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
      else CHECK(s.diagonal[i + 1] == 0);
    }
    if (rows == cols) {
      Integer prod = 1;
      for (const auto& x : s.diagonal) prod *= x;
      CHECK(prod == abs(leibniz_det(a)));
    }
  }
}

TEST_CASE("symmetric powers") {
  CHECK(sym_power(IntMatrix::identity(3), 4) == IntMatrix::identity(15));
  const IntMatrix a2{{0, 1}, {1, 3}};
  CHECK(sym_power(a2, 1) == a2);
  CHECK(det(minus_identity(sym_power(a2, 2))) == 18);
  CHECK(sym_power_dimension(5, 9) == 715);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(1, 4));
    const auto k = static_cast<unsigned>(uniform(1, 4));
    const IntMatrix a = random_matrix(n, -3, 3);
    const IntMatrix s = sym_power(a, k);
    CHECK(char_poly(s) == char_poly(sym_power_by_expansion(a, k)));
    const Integer sign = s.rows() % 2 ? -1 : 1;
    CHECK(char_poly(s)(Integer(1)) == sign * det(minus_identity(s)));
  }
  // functoriality of Sym^k
  const IntMatrix a = random_unimodular(3), b = random_unimodular(3);
  CHECK(sym_power(a * b, 3) == sym_power(a, 3) * sym_power(b, 3));
  Budgets tight;
  tight.sym_power_dim = 9;
  CHECK_THROWS_AS(sym_power(IntMatrix::identity(3), 3, tight), BudgetExceeded);
}

TEST_CASE("resultants and product spectra") {
  const IntPolynomial p{-1, -3, 1};
  CHECK(product_spectrum_poly(p, 1) == p);
  CHECK(product_spectrum_poly(p, 2) == IntPolynomial{1, -11, 1} * IntPolynomial{1, 1}.pow(2));
  CHECK(product_spectrum_poly(IntPolynomial{-1, 1}, 5) == IntPolynomial{-1, 1});
  // Res(x - a, g) = g(a) up to sign conventions: Res(f, g) = prod g(roots of f) for monic f
  CHECK(resultant(IntPolynomial{-2, 1}, IntPolynomial{1, 0, 1}) == 5);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix a = random_matrix(static_cast<std::size_t>(uniform(1, 3)), -4, 4);
    const IntMatrix b = random_matrix(static_cast<std::size_t>(uniform(1, 3)), -4, 4);
    CHECK(multiplicative_composition(char_poly(a), char_poly(b)) == char_poly(kronecker(a, b)));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const IntMatrix c = random_matrix(static_cast<std::size_t>(uniform(1, 3)), -3, 3);
    const auto k = static_cast<unsigned>(uniform(1, 4));
    const IntPolynomial spectrum = product_spectrum_poly(char_poly(c), k);
    CHECK((spectrum(Integer(1)) == 0) == is_singular(minus_identity(sym_power(c, k))));
  }
}
