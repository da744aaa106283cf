#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rinf/integer.hpp"

namespace rinf {

/// Univariate polynomial over Z, constant term first. Trailing zeros are
/// trimmed so the leading coefficient is non-zero unless the polynomial is 0.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t k, const Integer& c = 1);
  static IntPolynomial x() { return monomial(1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;

  IntPolynomial derivative() const;
  /// x^deg p(1/x).
  IntPolynomial reversed() const;
  /// p(-x).
  IntPolynomial negated_argument() const;
  Integer content() const;
  /// p / content, with positive leading coefficient.
  IntPolynomial primitive_part() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  IntPolynomial operator-() const;
  IntPolynomial pow(unsigned k) const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "x^2 - 3x - 1" style.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Exact quotient a / b; throws InputError if b does not divide a over Z.
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd over Q[x] with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
/// Yun decomposition: p = c * prod f_i^{m_i}, each f_i primitive squarefree.
std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p);
/// Multiplicity of the integer root a (0 if p(a) != 0). p must be non-zero.
unsigned root_multiplicity(IntPolynomial p, const Integer& a);
/// Distinct real roots of p in the closed interval [lo, hi], via Sturm chains.
std::size_t count_distinct_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi);
/// Real roots in [lo, hi] counted with multiplicity.
std::size_t count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi);

}  // namespace rinf
