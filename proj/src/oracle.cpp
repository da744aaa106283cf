#include "rinf/oracle.hpp"

#include <numeric>

#include "rinf/errors.hpp"
#include "rinf/intmat.hpp"

namespace rinf {

namespace {

std::uint64_t checked_size(std::uint64_t m, int exponent, const Budgets& budgets) {
  if (m < 2) throw InputError("modulus must be at least 2");
  std::uint64_t size = 1;
  for (int i = 0; i < exponent; ++i) {
    if (size > budgets.model_size / m) throw BudgetExceeded("model_size", UINT64_MAX, budgets.model_size);
    size *= m;
  }
  return size;
}

std::uint64_t reduce_mod(const Integer& x, std::uint64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
  return r.get_ui();
}

class UnionFind {
 public:
  explicit UnionFind(std::uint64_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::uint64_t find(std::uint64_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::uint64_t> parent_;
};

}  // namespace

FiniteModel FiniteModel::abelian(int rank, std::uint64_t m, const Budgets& budgets) {
  if (rank < 1) throw InputError("abelian model needs rank >= 1");
  return FiniteModel(ModelKind::AbelianModM, rank, m, checked_size(m, rank, budgets));
}

FiniteModel FiniteModel::class2(std::uint64_t m, const Budgets& budgets) {
  return FiniteModel(ModelKind::Class2ModM, 2, m, checked_size(m, 3, budgets));
}

std::string FiniteModel::name() const {
  return kind_ == ModelKind::AbelianModM ? "AbelianModM(" + std::to_string(rank_) + "," + std::to_string(m_) + ")"
                                         : "Class2ModM(2," + std::to_string(m_) + ")";
}

std::vector<std::uint64_t> FiniteModel::coords(std::uint64_t e) const {
  const std::size_t n = kind_ == ModelKind::AbelianModM ? static_cast<std::size_t>(rank_) : 3;
  std::vector<std::uint64_t> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = e % m_;
    e /= m_;
  }
  return c;
}

std::uint64_t FiniteModel::element(const std::vector<std::uint64_t>& c) const {
  std::uint64_t e = 0;
  for (std::size_t i = c.size(); i-- > 0;) e = e * m_ + c[i] % m_;
  return e;
}

std::uint64_t FiniteModel::multiply(std::uint64_t x, std::uint64_t y) const {
  auto a = coords(x);
  const auto b = coords(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % m_;
  if (kind_ == ModelKind::Class2ModM) {
    const auto ax = coords(x);
    a[2] = (a[2] + ax[0] * b[1]) % m_;
  }
  return element(a);
}

std::uint64_t FiniteModel::inverse(std::uint64_t x) const {
  const auto a = coords(x);
  std::vector<std::uint64_t> inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[i] = (m_ - a[i]) % m_;
  // (a,b,c)^-1 = (-a, -b, ab - c)
  if (kind_ == ModelKind::Class2ModM) inv[2] = (a[0] * a[1] % m_ + m_ - a[2]) % m_;
  return element(inv);
}

std::uint64_t FiniteModel::power(std::uint64_t x, std::uint64_t e) const {
  std::uint64_t result = identity();
  while (e) {
    if (e & 1) result = multiply(result, x);
    x = multiply(x, x);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> FiniteModel::generators() const {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < rank_; ++i) {
    std::vector<std::uint64_t> c(kind_ == ModelKind::AbelianModM ? static_cast<std::size_t>(rank_) : 3, 0);
    c[static_cast<std::size_t>(i)] = 1;
    out.push_back(element(c));
  }
  return out;
}

FiniteAutomorphism::FiniteAutomorphism(const FiniteModel& model, const IntMatrix& a)
    : model_(model), matrix_(a), images_(model.size()) {
  const auto r = static_cast<std::size_t>(model.rank());
  if (a.rows() != r || a.cols() != r)
    throw InputError("matrix must be " + std::to_string(r) + "x" + std::to_string(r) + " for " + model.name());
  const std::uint64_t m = model.modulus();
  if (model.kind() == ModelKind::AbelianModM) {
    for (std::uint64_t e = 0; e < model.size(); ++e) {
      const auto v = model.coords(e);
      std::vector<std::uint64_t> w(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < r; ++j) acc += a(i, j) * Integer(static_cast<unsigned long>(v[j]));
        w[i] = reduce_mod(acc, m);
      }
      images_[e] = model.element(w);
    }
  } else {
    const std::uint64_t fx = model.element({reduce_mod(a(0, 0), m), reduce_mod(a(1, 0), m), 0});
    const std::uint64_t fy = model.element({reduce_mod(a(0, 1), m), reduce_mod(a(1, 1), m), 0});
    const std::uint64_t fz = model.element({0, 0, reduce_mod(det(a), m)});
    for (std::uint64_t e = 0; e < model.size(); ++e) {
      // (a,b,c) = x^a y^b z^(c - ab)
      const auto c = model.coords(e);
      const std::uint64_t central = (c[2] + m - c[0] * c[1] % m) % m;
      images_[e] = model.multiply(model.multiply(model.power(fx, c[0]), model.power(fy, c[1])), model.power(fz, central));
    }
    // a map defined on normal forms is a homomorphism iff it respects right
    // multiplication by each generator
    for (std::uint64_t g : model.generators())
      for (std::uint64_t e = 0; e < model.size(); ++e)
        if (images_[model.multiply(e, g)] != model.multiply(images_[e], images_[g]))
          throw InputError("matrix does not define a homomorphism of " + model.name());
  }
  std::vector<char> hit(model.size(), 0);
  for (std::uint64_t img : images_) {
    if (hit[img]) throw InputError("matrix does not define a bijection of " + model.name());
    hit[img] = 1;
  }
}

std::uint64_t count_twisted_classes_bfs(const FiniteAutomorphism& f) {
  const FiniteModel& g = f.model();
  UnionFind uf(g.size());
  std::uint64_t classes = g.size();
  for (std::uint64_t z : g.generators()) {
    const std::uint64_t twist = g.inverse(f(z));
    for (std::uint64_t y = 0; y < g.size(); ++y)
      if (uf.unite(y, g.multiply(g.multiply(z, y), twist))) --classes;
  }
  return classes;
}

std::uint64_t count_twisted_classes_burnside(const FiniteAutomorphism& f, const Budgets& budgets) {
  const FiniteModel& g = f.model();
  if (g.size() > budgets.burnside_size) throw BudgetExceeded("burnside_size", g.size(), budgets.burnside_size);
  std::uint64_t fixed = 0;
  for (std::uint64_t z = 0; z < g.size(); ++z) {
    const std::uint64_t twist = g.inverse(f(z));
    for (std::uint64_t y = 0; y < g.size(); ++y)
      if (g.multiply(g.multiply(z, y), twist) == y) ++fixed;
  }
  if (fixed % g.size()) throw VerificationFailure("Burnside sum is not divisible by the group order");
  return fixed / g.size();
}

AbelianCokerReport abelian_coker_check(const IntMatrix& a, std::uint64_t m, const Budgets& budgets) {
  if (!a.is_square() || a.rows() == 0) throw InputError("abelian_coker_check: expected a square matrix");
  const int r = static_cast<int>(a.rows());
  const FiniteAutomorphism f(FiniteModel::abelian(r, m, budgets), a);
  AbelianCokerReport out;
  out.m = m;
  out.bfs_count = count_twisted_classes_bfs(f);
  out.burnside_count = count_twisted_classes_burnside(f, budgets);
  const IntMatrix shifted = IntMatrix::identity(a.rows()) - a;
  out.det_i_minus_a = det(shifted);
  out.elementary_divisors = smith_normal_form(shifted).diagonal;
  out.image_size = 1;
  for (const Integer& d : out.elementary_divisors) {
    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), d.get_mpz_t(), m);  // gcd(0, m) = m
    out.image_size *= m / g.get_ui();
  }
  out.coker_prediction = f.model().size() / out.image_size;
  if (out.det_i_minus_a != 0) {
    out.reidemeister_number = abs(out.det_i_minus_a);
    const Integer& largest = out.elementary_divisors.back();
    out.full_cokernel_visible = Integer(static_cast<unsigned long>(m)) % largest == 0;
  }
  out.agree = out.bfs_count == out.burnside_count && out.bfs_count == out.coker_prediction &&
              (!out.full_cokernel_visible || Integer(static_cast<unsigned long>(out.bfs_count)) == *out.reidemeister_number);
  return out;
}

Class2Report class2_check(const IntMatrix& a, std::uint64_t m, const Budgets& budgets) {
  const FiniteAutomorphism f(FiniteModel::class2(m, budgets), a);
  Class2Report out;
  out.m = m;
  out.bfs_count = count_twisted_classes_bfs(f);
  out.burnside_count = count_twisted_classes_burnside(f, budgets);
  const AbelianCokerReport bottom = abelian_coker_check(a, m, budgets);
  Integer g;
  const Integer centre = 1 - det(a);
  mpz_gcd_ui(g.get_mpz_t(), centre.get_mpz_t(), m);
  const std::uint64_t centre_coker = g.get_ui();  // gcd(0, m) = m
  out.coker_prediction = bottom.coker_prediction * centre_coker;
  out.layers_invertible = bottom.coker_prediction == 1 && centre_coker == 1;
  out.agree = out.bfs_count == out.burnside_count;
  return out;
}

}  // namespace rinf
