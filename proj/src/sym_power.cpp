#include <map>
#include <vector>

#include "rinf/errors.hpp"
#include "rinf/intmat.hpp"

namespace rinf {

namespace {

using Exponents = std::vector<unsigned short>;

// Degree-d monomials in n variables, lexicographically descending (x_1^d first).
struct MonomialTable {
  std::vector<Exponents> monomials;
  std::map<Exponents, std::size_t> index;

  MonomialTable(std::size_t n, unsigned d) {
    Exponents current(n, 0);
    fill(current, 0, d);
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  }

 private:
  void fill(Exponents& current, std::size_t var, unsigned remaining) {
    if (var + 1 == current.size()) {
      current[var] = static_cast<unsigned short>(remaining);
      monomials.push_back(current);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      current[var] = static_cast<unsigned short>(e);
      fill(current, var + 1, remaining - e);
    }
    current[var] = 0;
  }
};

class SymPowerBuilder {
 public:
  SymPowerBuilder(const IntMatrix& a, unsigned k) : a_(a), n_(a.rows()), k_(k) {
    for (unsigned d = 0; d <= k; ++d) tables_.emplace_back(n_, d);
    // successor[d][m][j] = index of (monomial m of degree d) * x_j in degree d + 1
    successor_.resize(k);
    for (unsigned d = 0; d < k; ++d) {
      auto& succ = successor_[d];
      succ.resize(tables_[d].monomials.size() * n_);
      for (std::size_t m = 0; m < tables_[d].monomials.size(); ++m) {
        Exponents e = tables_[d].monomials[m];
        for (std::size_t j = 0; j < n_; ++j) {
          ++e[j];
          succ[m * n_ + j] = tables_[d + 1].index.at(e);
          --e[j];
        }
      }
    }
    const std::size_t dim = tables_[k].monomials.size();
    result_ = IntMatrix(dim, dim);
  }

  IntMatrix build() {
    std::vector<Integer> unit{Integer(1)};
    Exponents alpha(n_, 0);
    descend(unit, 0, 0, alpha);
    return std::move(result_);
  }

 private:
  // product holds prod_{v in sequence} (A e_v) as a dense degree-`depth` vector
  void descend(const std::vector<Integer>& product, unsigned depth, std::size_t last_var, Exponents& alpha) {
    if (depth == k_) {
      const std::size_t col = tables_[k_].index.at(alpha);
      for (std::size_t row = 0; row < product.size(); ++row) result_(row, col) = product[row];
      return;
    }
    const auto& succ = successor_[depth];
    for (std::size_t v = last_var; v < n_; ++v) {
      std::vector<Integer> next(tables_[depth + 1].monomials.size());
      for (std::size_t m = 0; m < product.size(); ++m) {
        if (product[m] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          const Integer& coeff = a_(j, v);
          if (coeff == 0) continue;
          next[succ[m * n_ + j]] += product[m] * coeff;
        }
      }
      ++alpha[v];
      descend(next, depth + 1, v, alpha);
      --alpha[v];
    }
  }

  const IntMatrix& a_;
  std::size_t n_;
  unsigned k_;
  std::vector<MonomialTable> tables_;
  std::vector<std::vector<std::size_t>> successor_;
  IntMatrix result_;
};

// Resultant of a and b given as coefficient vectors (constant first) with
// explicit formal degrees; leading coefficients may vanish.
Integer sylvester_resultant(const std::vector<Integer>& a, std::size_t deg_a, const std::vector<Integer>& b,
                            std::size_t deg_b) {
  const std::size_t size = deg_a + deg_b;
  if (size == 0) return 1;
  auto coeff = [](const std::vector<Integer>& v, std::size_t k) { return k < v.size() ? v[k] : Integer(0); };
  IntMatrix s(size, size);
  for (std::size_t i = 0; i < deg_b; ++i)
    for (std::size_t t = 0; t <= deg_a; ++t) s(i, i + t) = coeff(a, deg_a - t);
  for (std::size_t i = 0; i < deg_a; ++i)
    for (std::size_t t = 0; t <= deg_b; ++t) s(deg_b + i, i + t) = coeff(b, deg_b - t);
  return det(s);
}

// Monic interpolation through values at x = 0, 1, ..., D via forward differences.
IntPolynomial interpolate_consecutive(const std::vector<Integer>& values) {
  const std::size_t count = values.size();
  std::vector<Integer> diff = values;
  std::vector<Rational> newton(count);
  Integer factorial = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    newton[k] = Rational(diff[0], factorial);
    newton[k].canonicalize();
    for (std::size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  // Horner in Newton basis with nodes 0..D-1
  std::vector<Rational> poly{newton[count - 1]};
  for (std::size_t k = count - 1; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1);
    const Rational node(static_cast<long>(k));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * node;
    }
    next[0] += newton[k];
    poly = std::move(next);
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(poly.size());
  for (Rational& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw VerificationFailure("interpolated resultant has non-integral coefficients");
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

std::uint64_t sym_power_dimension(std::size_t n, unsigned k) {
  // C(n+k-1, k) computed incrementally; each partial product is itself a binomial
  Integer value = 1;
  for (unsigned i = 1; i <= k; ++i) {
    value *= static_cast<unsigned long>(n - 1 + i);
    mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), i);
  }
  if (!value.fits_ulong_p()) return UINT64_MAX;
  return value.get_ui();
}

IntMatrix sym_power(const IntMatrix& a, unsigned k, const Budgets& budgets) {
  if (!a.is_square()) throw InputError("sym_power: matrix is not square");
  if (k == 0) throw InputError("sym_power: k must be positive");
  const std::uint64_t dim = sym_power_dimension(a.rows(), k);
  if (dim > budgets.sym_power_dim) throw BudgetExceeded("sym_power_dim", dim, budgets.sym_power_dim);
  if (k == 1) return a;
  return SymPowerBuilder(a, k).build();
}

Integer resultant(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return sylvester_resultant(a.coefficients(), static_cast<std::size_t>(a.degree()), b.coefficients(),
                             static_cast<std::size_t>(b.degree()));
}

IntPolynomial multiplicative_composition(const IntPolynomial& f, const IntPolynomial& g, const Budgets& budgets) {
  if (!f.is_monic() || !g.is_monic()) throw InputError("multiplicative composition needs monic polynomials");
  const std::size_t deg_f = static_cast<std::size_t>(f.degree());
  const std::size_t deg_g = static_cast<std::size_t>(g.degree());
  const std::size_t degree = deg_f * deg_g;
  if (degree > budgets.resultant_degree) throw BudgetExceeded("resultant_degree", degree, budgets.resultant_degree);
  if (degree == 0) return IntPolynomial{1};
  // R(x) = Res_y(f(y), y^deg_g g(x/y)) = prod_{f(a)=0} prod_{g(b)=0} (x - a b)
  std::vector<Integer> values;
  values.reserve(degree + 1);
  for (std::size_t x = 0; x <= degree; ++x) {
    std::vector<Integer> homog(deg_g + 1);
    Integer x_pow = 1;
    for (std::size_t j = 0; j <= deg_g; ++j) {
      homog[deg_g - j] = g.coeff(j) * x_pow;
      x_pow *= static_cast<unsigned long>(x);
    }
    values.push_back(sylvester_resultant(f.coefficients(), deg_f, homog, deg_g));
  }
  IntPolynomial r = interpolate_consecutive(values);
  if (r.degree() != static_cast<int>(degree) || !r.is_monic())
    throw VerificationFailure("multiplicative composition is not monic of the expected degree");
  return r;
}

IntPolynomial product_spectrum_poly(const IntPolynomial& p, unsigned k, const Budgets& budgets) {
  if (!p.is_monic()) throw InputError("product_spectrum_poly needs a monic polynomial");
  if (k == 0) throw InputError("product_spectrum_poly: k must be positive");
  Integer degree = 1;
  for (unsigned i = 0; i < k; ++i) degree *= p.degree();
  if (degree > budgets.resultant_degree)
    throw BudgetExceeded("resultant_degree", degree.fits_ulong_p() ? degree.get_ui() : UINT64_MAX,
                         budgets.resultant_degree);
  IntPolynomial acc = p;
  for (unsigned i = 1; i < k; ++i) acc = multiplicative_composition(acc, p, budgets);
  return acc;
}

}  // namespace rinf
