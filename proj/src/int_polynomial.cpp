#include "rinf/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "rinf/errors.hpp"

namespace rinf {

namespace {

// Dense polynomial over Q for the gcd / Sturm machinery.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPolynomial& p) {
  QPoly q;
  q.reserve(p.coefficients().size());
  for (const Integer& c : p.coefficients()) q.emplace_back(c);
  return q;
}

IntPolynomial to_primitive_z(const QPoly& q) {
  if (q.empty()) return {};
  Integer den = 1;
  for (const Rational& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> coeffs;
  coeffs.reserve(q.size());
  for (const Rational& c : q) coeffs.push_back(Integer(c.get_num() * (den / c.get_den())));
  return IntPolynomial(std::move(coeffs)).primitive_part();
}

// Remainder of a by b over Q.
QPoly rem(QPoly a, const QPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rational eval_q(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<QPoly> sturm_chain(const IntPolynomial& p) {
  std::vector<QPoly> chain;
  chain.push_back(to_q(p));
  chain.push_back(to_q(p.derivative()));
  trim(chain.back());
  while (!chain.back().empty()) {
    QPoly r = rem(chain[chain.size() - 2], chain.back());
    for (Rational& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

std::size_t sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const QPoly& q : chain) {
    const int s = sgn(eval_q(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::size_t k, const Integer& c) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversed() const {
  return IntPolynomial(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

IntPolynomial IntPolynomial::negated_argument() const {
  std::vector<Integer> c = coeffs_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return IntPolynomial(std::move(c));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const Integer& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c = coeffs_;
  for (Integer& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> c = coeffs_;
  for (Integer& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& s, const IntPolynomial& p) {
  std::vector<Integer> c = p.coeffs_;
  for (Integer& v : c) v *= s;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::pow(unsigned k) const {
  IntPolynomial result{1};
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) {
    if (!a.is_zero()) throw InputError("polynomial is not divisible");
    return {};
  }
  std::vector<Integer> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + db];
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) throw InputError("polynomial is not divisible");
    q[k] = top / b.leading();
    for (std::size_t i = 0; i <= db; ++i) r[k + i] -= q[k] * bc[i];
  }
  for (const Integer& c : r)
    if (c != 0) throw InputError("polynomial is not divisible");
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  QPoly x = to_q(a), y = to_q(b);
  while (!y.empty()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return to_primitive_z(x);
}

std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  if (p.degree() < 1) return out;
  const IntPolynomial f = p.primitive_part();
  IntPolynomial a = gcd(f, f.derivative());
  IntPolynomial b = exact_div(f, a);
  IntPolynomial c = exact_div(f.derivative(), a);
  IntPolynomial d = c - b.derivative();
  for (unsigned m = 1; b.degree() >= 1; ++m) {
    const IntPolynomial g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, m);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

unsigned root_multiplicity(IntPolynomial p, const Integer& a) {
  if (p.is_zero()) throw InputError("root multiplicity of the zero polynomial");
  const IntPolynomial shifted = IntPolynomial(std::vector<Integer>{-a, 1});
  unsigned m = 0;
  while (p(a) == 0) {
    p = exact_div(p, shifted);
    ++m;
  }
  return m;
}

std::size_t count_distinct_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1 || hi < lo) return 0;
  const IntPolynomial sqf = exact_div(p.primitive_part(), gcd(p, p.derivative()));
  const std::vector<QPoly> chain = sturm_chain(sqf);
  // Sturm counts roots in (lo, hi]; add lo itself separately.
  std::size_t count = sign_variations(chain, lo) - sign_variations(chain, hi);
  if (sqf(lo) == 0) ++count;
  return count;
}

std::size_t count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  std::size_t total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) total += mult * count_distinct_real_roots(factor, lo, hi);
  return total;
}

}  // namespace rinf
