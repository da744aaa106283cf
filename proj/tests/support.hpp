#pragma once

// Shared helpers for the test binaries: seeded generators and brute-force
// reference computations that avoid the library code they check.

#include <algorithm>
#include <complex>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "rinf/int_matrix.hpp"
#include "rinf/int_polynomial.hpp"
#include "rinf/words.hpp"

namespace testing_support {

using rinf::IntMatrix;
using rinf::IntPolynomial;
using rinf::Integer;
using rinf::Word;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260415);
  return gen;
}

inline void reseed(std::uint64_t seed) { rng().seed(seed); }

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Product of `steps` random elementary moves (row additions with multipliers in
/// [-2, 2], swaps, sign flips); always in GL(n, Z).
inline IntMatrix random_unimodular(std::size_t n, int steps = 6) {
  IntMatrix m = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    switch (uniform(0, 5)) {
      case 0:
        for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
        break;
      case 1:
        for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
        break;
      default: {
        long t = uniform(-2, 2);
        if (t == 0) t = 1;
        for (std::size_t c = 0; c < n; ++c) m(i, c) += t * m(j, c);
      }
    }
  }
  return m;
}

inline IntMatrix random_matrix(std::size_t n, long lo, long hi) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

inline Word random_word(int max_len, int max_gen) {
  std::vector<rinf::Syllable> raw;
  const long len = uniform(0, max_len);
  for (long k = 0; k < len; ++k)
    raw.push_back({static_cast<rinf::Generator>(uniform(0, max_gen)), uniform(0, 1) ? 1 : -1});
  return Word::reduce(raw);
}

/// Leibniz expansion over all permutations; only for n <= 8.
inline Integer leibniz_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Plain Durand-Kerner in long double; p should be squarefree.
inline std::vector<std::complex<long double>> durand_kerner(const IntPolynomial& p) {
  using C = std::complex<long double>;
  const int n = p.degree();
  std::vector<long double> c(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(k)).get_d();
  const long double lead = c.back();
  for (auto& x : c) x /= lead;
  auto eval = [&](C z) {
    C acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * z + c[static_cast<std::size_t>(k)];
    return acc;
  };
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::pow(C(0.4L, 0.9L), k);
  for (int iter = 0; iter < 5000; ++iter) {
    long double delta = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      C denom = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) denom *= z[i] - z[j];
      const C step = eval(z[i]) / denom;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-18L) break;
  }
  return z;
}

/// Roots with multiplicity: exact squarefree split, then Durand-Kerner per factor.
inline std::vector<std::complex<long double>> reference_roots(const IntPolynomial& p) {
  std::vector<std::complex<long double>> out;
  for (const auto& [factor, mult] : rinf::squarefree_decomposition(p)) {
    if (factor.degree() < 1) continue;
    const auto roots = durand_kerner(factor);
    for (unsigned m = 0; m < mult; ++m) out.insert(out.end(), roots.begin(), roots.end());
  }
  return out;
}

/// Largest distance in an optimal pairing of two equal-size multisets:
/// binary search over the pairwise distances, each threshold tested by
/// bipartite matching.
inline long double bottleneck_distance(std::vector<std::complex<long double>> a,
                                       std::vector<std::complex<long double>> b) {
  if (a.size() != b.size()) return 1e300L;
  std::vector<long double> candidates;
  for (const auto& x : a)
    for (const auto& y : b) candidates.push_back(std::abs(x - y));
  std::sort(candidates.begin(), candidates.end());
  // bipartite matching (Kuhn) restricted to edges <= threshold
  auto feasible = [&](long double t) {
    std::vector<int> match(b.size(), -1);
    std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (seen[j] || std::abs(a[i] - b[j]) > t) continue;
        seen[j] = 1;
        if (match[j] < 0 || augment(static_cast<std::size_t>(match[j]), seen)) {
          match[j] = static_cast<int>(i);
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<char> seen(b.size(), 0);
      if (!augment(i, seen)) return false;
    }
    return true;
  };
  std::size_t lo = 0, hi = candidates.size() - 1;
  if (candidates.empty()) return 0;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(candidates[mid])) hi = mid;
    else lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace testing_support
