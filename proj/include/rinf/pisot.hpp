#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "rinf/budget.hpp"
#include "rinf/errors.hpp"
#include "rinf/int_matrix.hpp"
#include "rinf/int_polynomial.hpp"

namespace rinf {

/// Input polynomial has the wrong shape for the dominance inequality.
class PolynomialShapeError : public InputError {
 public:
  enum class Reason { DegreeTooSmall, NotMonic, WrongConstantTerm };
  PolynomialShapeError(Reason reason, const std::string& what) : InputError(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// |a_{n-1}| > |a_{n-2}| + ... + |a_1| + 2 for monic p of degree n >= 2 with
/// constant term (-1)^{n+1}; throws PolynomialShapeError otherwise.
bool dominance_check(const IntPolynomial& p);

/// x^r - 3x^{r-1} + (-1)^{r+1} for r >= 2; x + 1 for r = 1.
IntPolynomial witness_poly(int r);
/// Companion matrix of witness_poly(r); (-1) for r = 1.
IntMatrix witness_matrix(int r);

struct RootCount {
  std::size_t inside = 0;
  std::size_t on_circle = 0;
  std::size_t outside = 0;
};

/// Exact counts of roots with |z| < 1, |z| = 1 and |z| > 1, with multiplicity.
RootCount unit_disk_root_count(const IntPolynomial& p);

/// Numeric roots (Aberth iteration on each squarefree factor), for diagnostics.
std::vector<std::complex<long double>> approximate_roots(const IntPolynomial& p);

/// Rational interval of width < 2^-bits holding the unique real root with
/// |x| > 1; nullopt unless exactly one root lies outside the closed unit disk
/// and it is real.
std::optional<std::pair<Rational, Rational>> dominant_root_interval(const IntPolynomial& p, unsigned bits = 40);

struct WitnessReport {
  int rank = 1;
  IntPolynomial polynomial;
  IntMatrix matrix;
  Integer det;
  std::optional<bool> dominance_ok;  // not applicable at r = 1
  RootCount roots;
  bool distinct_roots = false;   // gcd(p, p') = 1
  bool cyclotomic_free = false;  // gcd(p, x^m - 1) = 1 for m <= 2 deg p
  std::optional<unsigned> product_one_first_k;
  std::optional<std::pair<Rational, Rational>> outside_root_interval;
  /// Every expected property holds.
  bool ok = false;
};

/// Checks the witness A_r: roots, distinctness, and that the first k with a
/// k-fold eigenvalue product equal to 1 is exactly 2r.
WitnessReport verify_keyprop(int r, const Budgets& budgets = Budgets::defaults());

struct RigidityCase {
  std::vector<unsigned> exponents;  // sorted multiset d
  std::size_t unit_multiplicity = 0;
  std::size_t expected_multiplicity = 0;
};

struct RigidityReport {
  bool holds = true;
  std::vector<RigidityCase> cases;
};

/// For every exponent multiset d in {0..dmax}^n, forms the polynomial whose
/// roots are all products theta_{j_1}^{d_1} ... theta_{j_n}^{d_n} (j ranging
/// over all n^n index tuples) and compares the multiplicity of the root 1 with
/// the number of tuples whose merged exponent vector is constant and even.
/// Equality for every d means no other exponent pattern multiplies to 1.
RigidityReport product_rigidity_report(const IntPolynomial& p, unsigned dmax, const Budgets& budgets = Budgets::defaults());
bool product_rigidity_check(const IntPolynomial& p, unsigned dmax, const Budgets& budgets = Budgets::defaults());

}  // namespace rinf
