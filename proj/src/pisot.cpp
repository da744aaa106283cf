#include "rinf/pisot.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rinf/intmat.hpp"
#include "rinf/reidemeister.hpp"

namespace rinf {

bool dominance_check(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 2) throw PolynomialShapeError(PolynomialShapeError::Reason::DegreeTooSmall, "degree must be at least 2");
  if (!p.is_monic()) throw PolynomialShapeError(PolynomialShapeError::Reason::NotMonic, "polynomial is not monic");
  const Integer expected = n % 2 ? 1 : -1;
  if (p.coeff(0) != expected)
    throw PolynomialShapeError(PolynomialShapeError::Reason::WrongConstantTerm,
                               "constant term must be " + to_string(expected));
  Integer rest = 2;
  for (int k = 1; k <= n - 2; ++k) rest += abs(p.coeff(static_cast<std::size_t>(k)));
  return abs(p.coeff(static_cast<std::size_t>(n - 1))) > rest;
}

IntPolynomial witness_poly(int r) {
  if (r < 1) throw InputError("witness rank must be at least 1");
  if (r == 1) return IntPolynomial{1, 1};
  std::vector<Integer> c(static_cast<std::size_t>(r + 1));
  c[0] = r % 2 ? 1 : -1;
  c[static_cast<std::size_t>(r - 1)] += -3;
  c[static_cast<std::size_t>(r)] = 1;
  return IntPolynomial(std::move(c));
}

IntMatrix witness_matrix(int r) { return companion(witness_poly(r)); }

namespace {

// Inertia of a real symmetric matrix from the signs of its characteristic
// polynomial: all roots are real, so Descartes' rule is exact.
std::size_t positive_eigenvalues(const IntMatrix& h) {
  const IntPolynomial cp = char_poly(h);
  std::size_t changes = 0;
  int last = 0;
  for (const Integer& c : cp.coefficients()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Roots inside the unit disk for h with gcd(h, h reversed) = 1 and h(0) != 0,
// via the Schur-Cohn form T(b) T(b)^T - T(a) T(a)^T, whose positive index
// equals the number of roots inside.
std::size_t schur_cohn_inside(const IntPolynomial& h) {
  const auto m = static_cast<std::size_t>(h.degree());
  if (m == 0) return 0;
  IntMatrix ta(m, m), tb(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      ta(i, j) = h.coeff(i - j);
      tb(i, j) = h.coeff(m - (i - j));
    }
  const IntMatrix form = tb * tb.transpose() - ta * ta.transpose();
  if (is_singular(form)) throw VerificationFailure("Schur-Cohn form is singular after removing self-inversive part");
  return positive_eigenvalues(form);
}

// z^s Q(z + 1/z) = g(z) for palindromic g of degree 2s.
IntPolynomial joukowski_reduce(const IntPolynomial& g) {
  const int d = g.degree();
  const auto s = static_cast<std::size_t>(d / 2);
  IntPolynomial q{};
  q = q + IntPolynomial::monomial(0, g.coeff(s));
  IntPolynomial prev = IntPolynomial{2}, cur = IntPolynomial::x();  // T_0, T_1
  for (std::size_t k = 1; k <= s; ++k) {
    q = q + g.coeff(s + k) * cur;
    IntPolynomial next = IntPolynomial::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

}  // namespace

RootCount unit_disk_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw InputError("unit_disk_root_count: zero polynomial");
  RootCount out;
  std::vector<Integer> c = p.coefficients();
  std::size_t zeros = 0;
  while (c[zeros] == 0) ++zeros;
  out.inside += zeros;
  const IntPolynomial q(std::vector<Integer>(c.begin() + static_cast<long>(zeros), c.end()));
  if (q.degree() == 0) return out;

  const IntPolynomial g = gcd(q, q.reversed());
  const IntPolynomial h = exact_div(q.primitive_part(), g);
  out.inside += schur_cohn_inside(h);
  out.outside += static_cast<std::size_t>(h.degree()) - schur_cohn_inside(h);

  // self-inversive part: roots at +-1, then conjugate pairs on or off the circle
  IntPolynomial rest = g;
  for (const long root : {1L, -1L}) {
    const unsigned mult = root_multiplicity(rest, Integer(root));
    out.on_circle += mult;
    if (mult) rest = exact_div(rest, IntPolynomial{-root, 1}.pow(mult));
  }
  if (rest.degree() > 0) {
    const auto& rc = rest.coefficients();
    if (rest.degree() % 2 || !std::equal(rc.begin(), rc.end(), rc.rbegin()))
      throw VerificationFailure("self-inversive factor is not palindromic after removing +-1");
    const IntPolynomial reduced = joukowski_reduce(rest);
    const std::size_t real_in_band = count_real_roots(reduced, Rational(-2), Rational(2));
    out.on_circle += 2 * real_in_band;
    const std::size_t off = static_cast<std::size_t>(rest.degree()) - 2 * real_in_band;
    out.inside += off / 2;
    out.outside += off / 2;
  }
  return out;
}

std::vector<std::complex<long double>> approximate_roots(const IntPolynomial& p) {
  using C = std::complex<long double>;
  std::vector<C> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    const int n = factor.degree();
    if (n < 1) continue;
    std::vector<long double> a(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(k)] = factor.coeff(static_cast<std::size_t>(k)).get_d();
    const long double lead = a.back();
    for (auto& x : a) x /= lead;
    long double bound = 0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(k)]));
    bound = 1 + bound;
    auto eval = [&](C z, C& deriv) {
      C v = 1, d = 0;
      for (int k = n - 1; k >= 0; --k) {
        d = d * z + v;
        v = v * z + a[static_cast<std::size_t>(k)];
      }
      deriv = d;
      return v;
    };
    std::vector<C> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      z[static_cast<std::size_t>(k)] = std::polar(bound * 0.5L, 2 * 3.14159265358979323846L * k / n + 0.4L);
    for (int iter = 0; iter < 500; ++iter) {
      long double worst = 0;
      for (std::size_t i = 0; i < z.size(); ++i) {
        C d;
        const C v = eval(z[i], d);
        if (v == C(0)) continue;
        const C ratio = v / d;
        C repulsion = 0;
        for (std::size_t j = 0; j < z.size(); ++j)
          if (j != i) repulsion += C(1) / (z[i] - z[j]);
        const C step = ratio / (C(1) - ratio * repulsion);
        z[i] -= step;
        worst = std::max(worst, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
      }
      if (worst < 1e-17L) break;
    }
    for (unsigned m = 0; m < mult; ++m) out.insert(out.end(), z.begin(), z.end());
  }
  return out;
}

std::optional<std::pair<Rational, Rational>> dominant_root_interval(const IntPolynomial& p, unsigned bits) {
  if (p.degree() < 1) return std::nullopt;
  const RootCount rc = unit_disk_root_count(p);
  if (rc.outside != 1) return std::nullopt;
  Integer largest = 0;
  for (const auto& c : p.coefficients()) largest = std::max(largest, Integer(abs(c)));
  const Rational bound = Rational(largest, abs(p.leading())) + 1;
  Rational lo, hi;
  if (count_distinct_real_roots(p, Rational(1), bound) == 1 && p(Rational(1)) != 0) {
    lo = 1;
    hi = bound;
  } else if (count_distinct_real_roots(p, -bound, Rational(-1)) == 1 && p(Rational(-1)) != 0) {
    lo = -bound;
    hi = -1;
  } else {
    return std::nullopt;
  }
  Rational width_limit(1);
  mpz_mul_2exp(width_limit.get_den_mpz_t(), width_limit.get_den_mpz_t(), bits);
  width_limit.canonicalize();
  while (hi - lo >= width_limit) {
    Rational mid = (lo + hi) / 2;
    if (count_distinct_real_roots(p, lo, mid) == 1) hi = mid;
    else lo = mid;
  }
  return std::make_pair(lo, hi);
}

WitnessReport verify_keyprop(int r, const Budgets& budgets) {
  WitnessReport w;
  w.rank = r;
  w.polynomial = witness_poly(r);
  w.matrix = witness_matrix(r);
  w.det = det(w.matrix);
  if (r >= 2) w.dominance_ok = dominance_check(w.polynomial);
  w.roots = unit_disk_root_count(w.polynomial);
  w.distinct_roots = gcd(w.polynomial, w.polynomial.derivative()).degree() == 0;
  w.cyclotomic_free = true;
  for (int m = 1; m <= 2 * w.polynomial.degree(); ++m) {
    const IntPolynomial cyclic = IntPolynomial::monomial(static_cast<std::size_t>(m)) - IntPolynomial{1};
    if (gcd(w.polynomial, cyclic).degree() > 0) w.cyclotomic_free = false;
  }
  w.product_one_first_k = has_product_one(w.matrix, static_cast<unsigned>(2 * r), budgets);
  w.outside_root_interval = dominant_root_interval(w.polynomial);
  const bool roots_ok = r == 1 ? (w.roots.on_circle == 1)
                               : (w.roots.inside == static_cast<std::size_t>(r - 1) && w.roots.on_circle == 0 &&
                                  w.roots.outside == 1 && w.outside_root_interval.has_value() && w.cyclotomic_free);
  w.ok = w.det == -1 && w.dominance_ok.value_or(true) && roots_ok && w.distinct_roots &&
         w.product_one_first_k == static_cast<unsigned>(2 * r);
  return w;
}

RigidityReport product_rigidity_report(const IntPolynomial& p, unsigned dmax, const Budgets& budgets) {
  if (!p.is_monic() || p.degree() < 1) throw InputError("product_rigidity_check: p must be monic of positive degree");
  const auto n = static_cast<std::size_t>(p.degree());
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < n; ++i) {
    tuples *= n;
    if (tuples > budgets.resultant_degree) throw BudgetExceeded("resultant_degree", tuples, budgets.resultant_degree);
  }
  const IntMatrix c = companion(p);
  std::vector<IntPolynomial> power_polys;  // char poly of C^d
  IntMatrix power = IntMatrix::identity(n);
  for (unsigned d = 0; d <= dmax; ++d) {
    power_polys.push_back(char_poly(power));
    power = power * c;
  }

  RigidityReport report;
  std::vector<unsigned> d(n, 0);
  std::vector<std::size_t> j(n, 0);
  auto count_expected = [&] {
    std::size_t count = 0;
    std::fill(j.begin(), j.end(), 0);
    for (;;) {
      std::vector<unsigned> merged(n, 0);
      for (std::size_t i = 0; i < n; ++i) merged[j[i]] += d[i];
      if (std::all_of(merged.begin(), merged.end(), [&](unsigned e) { return e == merged[0]; }) && merged[0] % 2 == 0)
        ++count;
      std::size_t pos = 0;
      while (pos < n && ++j[pos] == n) j[pos++] = 0;
      if (pos == n) break;
    }
    return count;
  };
  // nondecreasing exponent multisets
  std::function<void(std::size_t, unsigned)> visit = [&](std::size_t pos, unsigned lowest) {
    if (pos == n) {
      IntPolynomial spectrum = power_polys[d[0]];
      for (std::size_t i = 1; i < n; ++i) spectrum = multiplicative_composition(spectrum, power_polys[d[i]], budgets);
      RigidityCase rc{d, root_multiplicity(spectrum, Integer(1)), count_expected()};
      report.holds = report.holds && rc.unit_multiplicity == rc.expected_multiplicity;
      report.cases.push_back(std::move(rc));
      return;
    }
    for (unsigned e = lowest; e <= dmax; ++e) {
      d[pos] = e;
      visit(pos + 1, e);
    }
  };
  visit(0, 0);
  return report;
}

bool product_rigidity_check(const IntPolynomial& p, unsigned dmax, const Budgets& budgets) {
  return product_rigidity_report(p, dmax, budgets).holds;
}

}  // namespace rinf
