#pragma once

#include <cstdint>
#include <vector>

#include "rinf/budget.hpp"
#include "rinf/int_matrix.hpp"
#include "rinf/int_polynomial.hpp"

namespace rinf {

// ---- determinants -----------------------------------------------------------

/// Exact determinant. Small matrices use Bareiss elimination, larger ones a
/// multimodular computation bounded by Hadamard's inequality.
Integer det(const IntMatrix& a);
Integer det_bareiss(const IntMatrix& a);
Integer det_multimodular(const IntMatrix& a);
/// Determinant modulo a prime p < 2^62.
std::uint64_t det_mod(const IntMatrix& a, std::uint64_t p);
/// Exact singularity test: a non-zero residue settles it, otherwise falls back to det().
bool is_singular(const IntMatrix& a);
/// Rank over Q, fraction-free.
std::size_t rank(const IntMatrix& a);

/// a - I.
IntMatrix minus_identity(const IntMatrix& a);

// ---- polynomials from matrices ---------------------------------------------

/// det(xI - A) by the division-free Berkowitz algorithm.
IntPolynomial char_poly(const IntMatrix& a);

/// Companion matrix with ones on the sub-diagonal and the negated
/// coefficients c_0..c_{n-1} in the last column. p must be monic.
IntMatrix companion(const IntPolynomial& p);

// ---- Smith normal form ------------------------------------------------------

struct SmithForm {
  std::vector<Integer> diagonal;  // d_1 | d_2 | ..., all >= 0
  IntMatrix left;                 // unimodular, left * A * right = diag
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& a);
/// Order of coker(A) for square A; 0 encodes an infinite cokernel.
Integer cokernel_order(const IntMatrix& a);

// ---- symmetric powers and product spectra ----------------------------------

/// Action of A on degree-k monomials in n variables (graded lexicographic
/// basis, x_1^k first). Dimension C(n+k-1, k) must fit the sym_power budget.
IntMatrix sym_power(const IntMatrix& a, unsigned k, const Budgets& budgets = Budgets::defaults());
/// C(n+k-1, k), saturating at UINT64_MAX.
std::uint64_t sym_power_dimension(std::size_t n, unsigned k);

/// Resultant via the Sylvester determinant (formal degrees of a and b).
Integer resultant(const IntPolynomial& a, const IntPolynomial& b);
/// Monic polynomial whose roots are all products alpha * beta with alpha a
/// root of f and beta a root of g. Both inputs monic.
IntPolynomial multiplicative_composition(const IntPolynomial& f, const IntPolynomial& g,
                                         const Budgets& budgets = Budgets::defaults());
/// Roots are all ordered k-fold products of roots of p (degree deg(p)^k).
IntPolynomial product_spectrum_poly(const IntPolynomial& p, unsigned k,
                                    const Budgets& budgets = Budgets::defaults());

}  // namespace rinf
