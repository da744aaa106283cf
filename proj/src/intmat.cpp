#include "rinf/intmat.hpp"

#include <algorithm>
#include <mutex>

#include "rinf/errors.hpp"

namespace rinf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void require_square(const IntMatrix& a, const char* what) {
  if (!a.is_square())
    throw InputError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     ", not square");
}

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 e, u64 p) {
  u64 result = 1;
  base %= p;
  while (e) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

// Shoup's precomputed-quotient multiplication by a fixed w modulo p < 2^62.
struct ShoupFactor {
  u64 w;
  u64 w_shoup;
  u64 p;
  ShoupFactor(u64 w_, u64 p_) : w(w_), w_shoup(static_cast<u64>((static_cast<u128>(w_) << 64) / p_)), p(p_) {}
  u64 operator()(u64 x) const {
    const u64 q = static_cast<u64>((static_cast<u128>(x) * w_shoup) >> 64);
    u64 r = x * w - q * p;
    return r >= p ? r - p : r;
  }
};

// Primes just below 2^62, generated on demand and shared.
u64 modular_prime(std::size_t index) {
  static std::mutex guard;
  static std::vector<u64> primes;
  std::lock_guard lock(guard);
  while (primes.size() <= index) {
    Integer candidate = primes.empty() ? (Integer(1) << 62) : Integer(static_cast<unsigned long>(primes.back()));
    // walk downwards: previous prime below candidate
    do {
      candidate -= 1;
    } while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0);
    primes.push_back(candidate.get_ui());
  }
  return primes[index];
}

// Bits of Hadamard's bound on |det|, using the smaller of the row and column products.
std::size_t hadamard_bits(const IntMatrix& a) {
  const std::size_t n = a.rows();
  auto bound = [&](bool by_rows) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const Integer& v = by_rows ? a(i, j) : a(j, i);
        s += v * v;
      }
      if (s == 0) return std::size_t{0};
      bits += (mpz_sizeinbase(s.get_mpz_t(), 2) + 1) / 2;
    }
    return bits;
  };
  return std::min(bound(true), bound(false));
}

}  // namespace

Integer det_bareiss(const IntMatrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(i, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::uint64_t det_mod(const IntMatrix& a, std::uint64_t p) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  std::vector<u64> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap_ranges(m.begin() + piv * n, m.begin() + piv * n + n, m.begin() + c * n);
      det = det == 0 ? 0 : p - det;
    }
    const u64 pivot = m[c * n + c];
    det = mul_mod(det, pivot, p);
    const u64 inv = pow_mod(pivot, p - 2, p);
    const u64* prow = &m[c * n];
    for (std::size_t i = c + 1; i < n; ++i) {
      u64* row = &m[i * n];
      if (row[c] == 0) continue;
      const ShoupFactor f(mul_mod(row[c], inv, p), p);
      for (std::size_t j = c + 1; j < n; ++j) {
        const u64 t = f(prow[j]);
        row[j] = row[j] >= t ? row[j] - t : row[j] + p - t;
      }
      row[c] = 0;
    }
  }
  return det;
}

Integer det_multimodular(const IntMatrix& a) {
  require_square(a, "det");
  if (a.rows() == 0) return 1;
  const std::size_t bits = hadamard_bits(a);
  if (bits == 0) return 0;  // a zero row or column
  Integer residue = 0, modulus = 1;
  for (std::size_t k = 0; mpz_sizeinbase(modulus.get_mpz_t(), 2) <= bits + 2; ++k) {
    const u64 p = modular_prime(k);
    const u64 r = det_mod(a, p);
    // Garner step: residue += modulus * ((r - residue) / modulus mod p)
    const u64 res_p = mpz_fdiv_ui(residue.get_mpz_t(), p);
    const u64 mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    const u64 diff = r >= res_p ? r - res_p : r + p - res_p;
    const u64 t = mul_mod(diff, pow_mod(mod_p, p - 2, p), p);
    residue += modulus * Integer(static_cast<unsigned long>(t));
    modulus *= Integer(static_cast<unsigned long>(p));
  }
  if (2 * residue > modulus) residue -= modulus;
  return residue;
}

Integer det(const IntMatrix& a) {
  require_square(a, "det");
  return a.rows() <= 24 ? det_bareiss(a) : det_multimodular(a);
}

bool is_singular(const IntMatrix& a) {
  require_square(a, "det");
  if (a.rows() <= 24) return det_bareiss(a) == 0;
  for (std::size_t k = 0; k < 2; ++k)
    if (det_mod(a, modular_prime(k)) != 0) return false;
  return det_multimodular(a) == 0;
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

IntMatrix minus_identity(const IntMatrix& a) {
  require_square(a, "minus_identity");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= 1;
  return m;
}

IntPolynomial char_poly(const IntMatrix& a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  if (n == 0) return IntPolynomial{1};
  using Vec = std::vector<Integer>;
  // Berkowitz: transforms[k-1] is the (k+2) x (k+1) Toeplitz matrix for the
  // leading principal (k+1) x (k+1) block. Polynomials are highest degree first.
  std::vector<std::vector<Vec>> transforms(n - 1);
  for (std::size_t size = n; size >= 2; --size) {
    const std::size_t k = size - 1;
    Vec items_scalars;
    Vec col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = a(i, k);
    Vec current = col;
    std::vector<Vec> powers{current};
    for (std::size_t t = 0; t + 2 < size; ++t) {
      Vec next(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] += a(i, j) * current[j];
      current = std::move(next);
      powers.push_back(current);
    }
    Vec items{Integer(1), Integer(-a(k, k))};
    for (const Vec& v : powers) {
      Integer s = 0;
      for (std::size_t j = 0; j < k; ++j) s -= a(k, j) * v[j];
      items.push_back(s);
    }
    std::vector<Vec> t(size + 1, Vec(size));
    for (std::size_t c = 0; c < size; ++c)
      for (std::size_t r = c; r <= size; ++r) t[r][c] = items[r - c];
    transforms[k - 1] = std::move(t);
  }
  Vec poly{Integer(1), Integer(-a(0, 0))};
  for (const auto& t : transforms) {
    Vec next(t.size());
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < poly.size(); ++c) next[r] += t[r][c] * poly[c];
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

IntMatrix companion(const IntPolynomial& p) {
  if (p.degree() < 1) throw InputError("companion matrix needs degree >= 1");
  if (!p.is_monic()) throw InputError("companion matrix needs a monic polynomial, got " + p.to_string());
  const std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  for (std::size_t j = 0; j < n; ++j) m(j, n - 1) = -p.coeff(j);
  return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix s = a;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest non-zero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s(i, j) != 0 && (pi == rows || abs(s(i, j)) < abs(s(pi, pj)))) pi = i, pj = j;
      if (pi == rows) break;
      swap_rows(s, t, pi);
      swap_rows(left, t, pi);
      swap_cols(s, t, pj);
      swap_cols(right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        row_axpy(s, i, t, q);
        row_axpy(left, i, t, q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        col_axpy(s, j, t, q);
        col_axpy(right, j, t, q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      row_axpy(s, t, bad_row, Integer(-1));
      row_axpy(left, t, bad_row, Integer(-1));
    }
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
  }
  SmithForm out;
  out.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(s(t, t));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

Integer cokernel_order(const IntMatrix& a) {
  require_square(a, "cokernel_order");
  Integer order = 1;
  for (const Integer& d : smith_normal_form(a).diagonal) {
    if (d == 0) return 0;
    order *= d;
  }
  return order;
}

}  // namespace rinf
