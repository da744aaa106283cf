#include <map>

#include "doctest.h"
#include "rinf/errors.hpp"
#include "rinf/intmat.hpp"
#include "rinf/liering.hpp"
#include "support.hpp"

using namespace rinf;
using namespace testing_support;

namespace {

const GroupVariant chen(int r, int c) { return {GroupKind::MetabelianNilpotent, r, c}; }
const GroupVariant hall(int r, int c) { return {GroupKind::FreeNilpotent, r, c}; }

using Poly = std::map<std::vector<int>, Integer>;

Poly left_normed(const std::vector<int>& letters) {
  Poly p{{{letters[0]}, 1}};
  for (std::size_t k = 1; k < letters.size(); ++k) {
    Poly next;
    for (const auto& [w, c] : p) {
      auto right = w, left = std::vector<int>{letters[k]};
      right.push_back(letters[k]);
      left.insert(left.end(), w.begin(), w.end());
      next[right] += c;
      next[left] -= c;
    }
    p = std::move(next);
  }
  return p;
}

// Rank of the span of all left-normed brackets of the given length inside the
// free associative ring; equals dim L_i of the free Lie ring.
std::size_t free_lie_dimension_by_span(int r, int length) {
  std::vector<Poly> polys;
  std::vector<int> letters(static_cast<std::size_t>(length), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == letters.size()) {
      polys.push_back(left_normed(letters));
      return;
    }
    for (int j = 0; j < r; ++j) {
      letters[pos] = j;
      rec(pos + 1);
    }
  };
  rec(0);
  std::map<std::vector<int>, std::size_t> columns;
  for (const auto& p : polys)
    for (const auto& [w, c] : p)
      if (c != 0) columns.emplace(w, columns.size());
  IntMatrix m(polys.size(), std::max<std::size_t>(columns.size(), 1));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [w, c] : polys[i])
      if (c != 0) m(i, columns.at(w)) = c;
  return rank(m);
}

GradedVector random_vector(const LieRing& ring, int degree) {
  GradedVector v;
  v.degree = degree;
  for (const auto& e : ring.basis(degree)) v.add(e, uniform(-3, 3));
  return v;
}

GradedVector sum(GradedVector a, const GradedVector& b) {
  for (const auto& [e, c] : b.coords) a.add(e, c);
  return a;
}

// Multiset of i-fold products of the roots of char_poly(A) indexed by basis words.
std::vector<std::complex<long double>> predicted_roots(const IntMatrix& a, const std::vector<BasisElement>& basis) {
  const auto lambda = reference_roots(char_poly(a));
  std::vector<std::complex<long double>> out;
  for (const auto& t : basis) {
    std::complex<long double> prod = 1;
    for (int j : t) prod *= lambda[static_cast<std::size_t>(j)];
    out.push_back(prod);
  }
  return out;
}

}  // namespace

TEST_CASE("Chen basis") {
  LieRing ring(chen(2, 5));
  std::vector<std::size_t> sizes;
  for (int i = 1; i <= 4; ++i) sizes.push_back(ring.dimension(i));
  CHECK(sizes == std::vector<std::size_t>{2, 1, 2, 3});
  CHECK(ring.basis(3) == std::vector<BasisElement>{{1, 0, 0}, {1, 0, 1}});
  for (int r = 2; r <= 5; ++r)
    for (int i = 1; i <= 7; ++i) {
      // brute-force count of tuples j1 > j2 <= j3 <= ... <= ji
      std::size_t count = 0;
      std::vector<int> t(static_cast<std::size_t>(i), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == t.size()) {
          bool ok = i == 1 || t[0] > t[1];
          for (std::size_t k = 2; k < t.size(); ++k) ok = ok && t[k - 1] <= t[k];
          count += ok;
          return;
        }
        for (int j = 0; j < r; ++j) {
          t[pos] = j;
          rec(pos + 1);
        }
      };
      rec(0);
      CHECK(LieRing(chen(r, i)).dimension(i) == count);
      CHECK(chen_dimension(r, i) == count);
      if (r == 2 && i >= 2) CHECK(count == static_cast<std::size_t>(i - 1));
    }
  CHECK_THROWS_AS(ring.basis(6), InputError);
  CHECK_THROWS_AS(ring.basis(0), InputError);
  CHECK_THROWS_AS(LieRing(chen(1, 3)), InputError);
}

TEST_CASE("Lyndon basis sizes against the span of left-normed brackets") {
  LieRing ring(hall(2, 5));
  std::vector<std::size_t> sizes;
  for (int i = 1; i <= 5; ++i) sizes.push_back(ring.dimension(i));
  CHECK(sizes == std::vector<std::size_t>{2, 1, 2, 3, 6});
  for (int r = 2; r <= 3; ++r)
    for (int i = 1; i <= (r == 2 ? 6 : 4); ++i) {
      const std::size_t dim = LieRing(hall(r, i)).dimension(i);
      CHECK(dim == free_lie_dimension_by_span(r, i));
      CHECK(dim == lyndon_dimension(r, i));
    }
}

TEST_CASE("generator brackets") {
  for (const auto& v : {chen(2, 3), hall(2, 3)}) {
    LieRing ring(v);
    const auto x1 = GradedVector::generator(0), x2 = GradedVector::generator(1);
    const GradedVector b = ring.bracket(x2, x1);
    if (v.kind == GroupKind::MetabelianNilpotent) {
      CHECK(b.coords == std::map<BasisElement, Integer>{{{1, 0}, 1}});
    } else {
      // Lyndon word 01 is [x1, x2], so [x2, x1] is its negative
      CHECK(b.coords == std::map<BasisElement, Integer>{{{0, 1}, -1}});
    }
    CHECK(ring.bracket(x1, x1).is_zero());
    CHECK(ring.bracket(ring.bracket(x2, x1), ring.bracket(x2, x1)).is_zero());
  }
  LieRing ring(chen(2, 4));
  const GradedVector u = ring.bracket(GradedVector::generator(1), GradedVector::generator(0));
  CHECK(ring.bracket(u, u).is_zero());
  CHECK(ring.bracket(u, u).degree == 4);
}

TEST_CASE("antisymmetry and Jacobi") {
  for (const auto& v : {chen(3, 5), hall(3, 5), chen(2, 6), hall(2, 6)}) {
    LieRing ring(v);
    for (int trial = 0; trial < 20; ++trial) {
      const int da = static_cast<int>(uniform(1, 2)), db = static_cast<int>(uniform(1, 2));
      const int dc = static_cast<int>(uniform(1, v.cls - da - db));
      const auto a = random_vector(ring, da), b = random_vector(ring, db), c = random_vector(ring, dc);
      auto neg = ring.bracket(b, a);
      for (auto& [e, x] : neg.coords) x = -x;
      CHECK(ring.bracket(a, b) == neg);
      const auto j = sum(sum(ring.bracket(a, ring.bracket(b, c)), ring.bracket(b, ring.bracket(c, a))),
                         ring.bracket(c, ring.bracket(a, b)));
      CHECK(j.is_zero());
    }
  }
}

TEST_CASE("induced matrices") {
  const IntMatrix a{{0, 1}, {1, 3}};
  CHECK(induced_matrix(a, chen(2, 3), 1) == a);
  CHECK(induced_matrix(a, chen(2, 3), 2) == IntMatrix{{-1}});
  for (int i = 1; i <= 5; ++i) CHECK(induced_matrix(IntMatrix::identity(2), chen(2, 5), i) == IntMatrix::identity(LieRing(chen(2, 5)).dimension(i)));
  CHECK_THROWS_AS(induced_matrix(IntMatrix::identity(3), chen(2, 3), 2), InputError);

  for (int r = 2; r <= 3; ++r)
    for (const auto& v : {chen(r, 4), hall(r, 4)}) {
      LieRing ring(v);
      for (int trial = 0; trial < 4; ++trial) {
        const IntMatrix x = random_unimodular(static_cast<std::size_t>(r));
        const IntMatrix y = random_unimodular(static_cast<std::size_t>(r));
        const auto mx = ring.induced_matrices(x, 4), my = ring.induced_matrices(y, 4), mxy = ring.induced_matrices(x * y, 4);
        for (int i = 0; i < 4; ++i) CHECK(mxy[static_cast<std::size_t>(i)] == mx[static_cast<std::size_t>(i)] * my[static_cast<std::size_t>(i)]);
        // up to degree 3 the free Lie ring is already metabelian
        for (int i = 2; i <= 3; ++i)
          CHECK(char_poly(induced_matrix(x, chen(r, 4), i)) == char_poly(induced_matrix(x, hall(r, 4), i)));
      }
    }
}

TEST_CASE("induced spectra are products of degree-1 eigenvalues") {
  for (int r = 2; r <= 3; ++r)
    for (const auto& v : {chen(r, 4), hall(r, 4)}) {
      LieRing ring(v);
      for (int trial = 0; trial < 3; ++trial) {
        const IntMatrix a = random_unimodular(static_cast<std::size_t>(r), 8);
        const auto ms = ring.induced_matrices(a, 4);
        for (int i = 2; i <= 4; ++i) {
          const auto actual = reference_roots(char_poly(ms[static_cast<std::size_t>(i - 1)]));
          const auto expected = predicted_roots(a, ring.basis(i));
          CHECK(bottleneck_distance(actual, expected) < 1e-6L);
        }
      }
    }
}

TEST_CASE("budgets") {
  Budgets tight;
  tight.basis_dim = 8;
  CHECK_THROWS_AS(LieRing(hall(2, 6), tight).basis(6), BudgetExceeded);
  tight = Budgets{};
  tight.lie_word_space = 16;
  CHECK_THROWS_AS(LieRing(hall(2, 5), tight).induced_matrix(IntMatrix::identity(2), 5), BudgetExceeded);
}
