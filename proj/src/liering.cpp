#include "rinf/liering.hpp"

#include <algorithm>
#include <functional>

#include "rinf/errors.hpp"

namespace rinf {

void GroupVariant::validate() const {
  if (rank < 2) throw InputError("rank must be at least 2, got " + std::to_string(rank));
  if (cls < 1) throw InputError("class must be at least 1, got " + std::to_string(cls));
}

std::string GroupVariant::to_string() const {
  return std::string(kind == GroupKind::FreeNilpotent ? "N" : "M") + "(" + std::to_string(rank) + "," +
         std::to_string(cls) + ")";
}

void GradedVector::add(const BasisElement& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coords.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coords.erase(it);
}

GradedVector GradedVector::generator(int j) {
  GradedVector v;
  v.degree = 1;
  v.add({j}, 1);
  return v;
}

std::uint64_t chen_dimension(int rank, int degree) {
  if (degree < 1 || rank < 1) return 0;
  if (degree == 1) return static_cast<std::uint64_t>(rank);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(rank + degree - 2), static_cast<unsigned long>(degree));
  binom *= degree - 1;
  return binom.fits_ulong_p() ? binom.get_ui() : UINT64_MAX;
}

std::uint64_t lyndon_dimension(int rank, int degree) {
  if (degree < 1 || rank < 1) return 0;
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    return n > 1 ? -result : result;
  };
  Integer total = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(rank), static_cast<unsigned long>(degree / d));
    total += mobius(d) * power;
  }
  total /= degree;
  return total.fits_ulong_p() ? total.get_ui() : UINT64_MAX;
}

namespace {

using Assoc = std::vector<Integer>;  // dense over words of one length, base-r index

bool is_lyndon(const BasisElement& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i), w.end())) return false;
  return !w.empty();
}

std::vector<BasisElement> lyndon_words(int rank, int length) {
  std::vector<BasisElement> out;
  BasisElement w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == length) out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == rank - 1) w.pop_back();
  }
  return out;
}

std::vector<BasisElement> chen_tuples(int rank, int degree) {
  std::vector<BasisElement> out;
  if (degree == 1) {
    for (int j = 0; j < rank; ++j) out.push_back({j});
    return out;
  }
  BasisElement t(static_cast<std::size_t>(degree));
  std::function<void(std::size_t, int)> tail = [&](std::size_t pos, int lowest) {
    if (pos == t.size()) {
      out.push_back(t);
      return;
    }
    for (int j = lowest; j < rank; ++j) {
      t[pos] = j;
      tail(pos + 1, j);
    }
  };
  for (int j1 = 1; j1 < rank; ++j1)
    for (int j2 = 0; j2 < j1; ++j2) {
      t[0] = j1;
      t[1] = j2;
      tail(2, j2);
    }
  return out;
}

// T(a, b | tail) = [x_a, x_b, x_t1, ..., x_tm] in the free metabelian ring,
// rewritten so that a > b <= min(tail).
void add_chen_normalized(GradedVector& out, int a, int b, std::vector<int> tail, Integer coeff) {
  if (a == b || coeff == 0) return;
  if (a < b) {
    std::swap(a, b);
    coeff = -coeff;
  }
  std::sort(tail.begin(), tail.end());
  if (tail.empty() || b <= tail.front()) {
    BasisElement key{a, b};
    key.insert(key.end(), tail.begin(), tail.end());
    out.add(key, coeff);
    return;
  }
  // Jacobi with a commuting tail: T(a,b|c,R) = T(a,c|b,R) - T(b,c|a,R)
  const int c = tail.front();
  std::vector<int> rest(tail.begin() + 1, tail.end());
  std::vector<int> with_b = rest, with_a = rest;
  with_b.push_back(b);
  with_a.push_back(a);
  std::sort(with_b.begin(), with_b.end());
  std::sort(with_a.begin(), with_a.end());
  BasisElement first{a, c};
  first.insert(first.end(), with_b.begin(), with_b.end());
  BasisElement second{b, c};
  second.insert(second.end(), with_a.begin(), with_a.end());
  out.add(first, coeff);
  out.add(second, -coeff);
}

BasisElement word_at(std::size_t idx, int rank, int length) {
  BasisElement w(static_cast<std::size_t>(length));
  for (int pos = length - 1; pos >= 0; --pos) {
    w[static_cast<std::size_t>(pos)] = static_cast<int>(idx % static_cast<std::size_t>(rank));
    idx /= static_cast<std::size_t>(rank);
  }
  return w;
}

// UV - VU; word concatenation is index arithmetic in base r.
Assoc assoc_commutator(const Assoc& u, const Assoc& v) {
  Assoc out(u.size() * v.size());
  const std::size_t shift_v = v.size();
  const std::size_t shift_u = u.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      const Integer prod = u[i] * v[j];
      out[i * shift_v + j] += prod;
      out[j * shift_u + i] -= prod;
    }
  }
  return out;
}

std::size_t standard_split(const BasisElement& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (is_lyndon(BasisElement(w.begin() + static_cast<long>(i), w.end()))) return i;
  throw VerificationFailure("word has no standard factorization");
}

}  // namespace

struct LieRing::Cache {
  std::mutex guard;
  std::map<int, std::vector<BasisElement>> bases;
  std::map<int, std::map<BasisElement, std::size_t>> positions;
  // expansion of each Lyndon bracket in the free associative ring
  std::map<BasisElement, Assoc> lyndon_expansion;
};

LieRing::LieRing(GroupVariant variant, const Budgets& budgets)
    : variant_(variant), budgets_(budgets), cache_(std::make_shared<Cache>()) {
  variant_.validate();
}

void LieRing::check_degree(int degree) const {
  if (degree < 1 || degree > variant_.cls)
    throw InputError("degree " + std::to_string(degree) + " outside 1.." + std::to_string(variant_.cls) + " for " +
                     variant_.to_string());
}

const std::vector<BasisElement>& LieRing::basis(int degree) const {
  check_degree(degree);
  std::lock_guard lock(cache_->guard);
  if (auto it = cache_->bases.find(degree); it != cache_->bases.end()) return it->second;
  const bool chen = variant_.kind == GroupKind::MetabelianNilpotent;
  const std::uint64_t dim = chen ? chen_dimension(variant_.rank, degree) : lyndon_dimension(variant_.rank, degree);
  if (dim > budgets_.basis_dim) throw BudgetExceeded("basis_dim", dim, budgets_.basis_dim);
  auto elements = chen ? chen_tuples(variant_.rank, degree) : lyndon_words(variant_.rank, degree);
  auto& positions = cache_->positions[degree];
  for (std::size_t i = 0; i < elements.size(); ++i) positions.emplace(elements[i], i);
  return cache_->bases.emplace(degree, std::move(elements)).first->second;
}

std::size_t LieRing::index_of(const BasisElement& e) const {
  const int degree = static_cast<int>(e.size());
  basis(degree);
  std::lock_guard lock(cache_->guard);
  const auto& positions = cache_->positions.at(degree);
  auto it = positions.find(e);
  if (it == positions.end()) throw InputError("not a basis element of " + variant_.to_string());
  return it->second;
}

GradedVector LieRing::to_vector(int degree, const std::vector<Integer>& column) const {
  const auto& b = basis(degree);
  if (column.size() != b.size()) throw InputError("coordinate vector has the wrong length");
  GradedVector v;
  v.degree = degree;
  for (std::size_t i = 0; i < b.size(); ++i) v.add(b[i], column[i]);
  return v;
}

std::vector<Integer> LieRing::to_column(const GradedVector& v) const {
  std::vector<Integer> col(dimension(v.degree));
  for (const auto& [key, c] : v.coords) col[index_of(key)] = c;
  return col;
}

namespace {

class LyndonAlgebra {
 public:
  LyndonAlgebra(int rank, const Budgets& budgets) : rank_(rank), budgets_(budgets) {}

  std::size_t space(int length) const {
    Integer size;
    mpz_ui_pow_ui(size.get_mpz_t(), static_cast<unsigned long>(rank_), static_cast<unsigned long>(length));
    const std::uint64_t s = size.fits_ulong_p() ? size.get_ui() : UINT64_MAX;
    if (s > budgets_.lie_word_space) throw BudgetExceeded("lie_word_space", s, budgets_.lie_word_space);
    return static_cast<std::size_t>(s);
  }

  // Expansion of the standard bracketing of w with leaves replaced by `leaf(letter)`.
  Assoc expand(const BasisElement& w, const std::function<Assoc(int)>& leaf, std::map<BasisElement, Assoc>& memo) const {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    Assoc result;
    if (w.size() == 1) {
      result = leaf(w[0]);
    } else {
      const std::size_t split = standard_split(w);
      const BasisElement u(w.begin(), w.begin() + static_cast<long>(split));
      const BasisElement v(w.begin() + static_cast<long>(split), w.end());
      space(static_cast<int>(w.size()));
      result = assoc_commutator(expand(u, leaf, memo), expand(v, leaf, memo));
    }
    memo.emplace(w, result);
    return result;
  }

  Assoc unit_leaf(int letter) const {
    Assoc a(static_cast<std::size_t>(rank_));
    a[static_cast<std::size_t>(letter)] = 1;
    return a;
  }

  // Rewrites a Lie element of the free associative ring in the Lyndon basis,
  // using that each Lyndon bracket P_w equals w plus lexicographically larger words.
  GradedVector reduce(Assoc a, int length, std::map<BasisElement, Assoc>& unit_memo) const {
    GradedVector out;
    out.degree = length;
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
      if (a[idx] == 0) continue;
      const BasisElement w = word_at(idx, rank_, length);
      if (!is_lyndon(w)) throw VerificationFailure("element is not in the free Lie ring");
      const Integer c = a[idx];
      const Assoc& pw = expand(w, [this](int l) { return unit_leaf(l); }, unit_memo);
      for (std::size_t j = idx; j < a.size(); ++j)
        if (pw[j] != 0) a[j] -= c * pw[j];
      out.add(w, c);
    }
    return out;
  }

  Assoc to_assoc(const GradedVector& v, std::map<BasisElement, Assoc>& unit_memo) const {
    Assoc out(space(v.degree));
    for (const auto& [w, c] : v.coords) {
      const Assoc& pw = expand(w, [this](int l) { return unit_leaf(l); }, unit_memo);
      for (std::size_t j = 0; j < out.size(); ++j)
        if (pw[j] != 0) out[j] += c * pw[j];
    }
    return out;
  }

  int rank() const { return rank_; }

 private:
  int rank_;
  const Budgets& budgets_;
};

}  // namespace

GradedVector LieRing::bracket(const GradedVector& u, const GradedVector& w) const {
  GradedVector out;
  out.degree = u.degree + w.degree;
  if (out.degree > variant_.cls || u.is_zero() || w.is_zero()) return out;
  if (variant_.kind == GroupKind::MetabelianNilpotent) {
    if (u.degree >= 2 && w.degree >= 2) return out;
    if (u.degree == 1 && w.degree >= 2) {
      GradedVector flipped = bracket(w, u);
      for (auto& [key, c] : flipped.coords) c = -c;
      return flipped;
    }
    for (const auto& [ku, cu] : u.coords)
      for (const auto& [kw, cw] : w.coords) {
        if (u.degree == 1) {
          add_chen_normalized(out, ku[0], kw[0], {}, cu * cw);
        } else {
          std::vector<int> tail(ku.begin() + 2, ku.end());
          tail.push_back(kw[0]);
          add_chen_normalized(out, ku[0], ku[1], std::move(tail), cu * cw);
        }
      }
    return out;
  }
  LyndonAlgebra algebra(variant_.rank, budgets_);
  std::lock_guard lock(cache_->guard);
  auto& memo = cache_->lyndon_expansion;
  const Assoc au = algebra.to_assoc(u, memo);
  const Assoc aw = algebra.to_assoc(w, memo);
  return algebra.reduce(assoc_commutator(au, aw), out.degree, memo);
}

std::vector<IntMatrix> LieRing::induced_matrices(const IntMatrix& a, int max_degree) const {
  const auto r = static_cast<std::size_t>(variant_.rank);
  if (a.rows() != r || a.cols() != r)
    throw InputError("induced_matrix: expected a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
  check_degree(max_degree);
  std::vector<IntMatrix> out{a};
  if (max_degree == 1) return out;

  if (variant_.kind == GroupKind::MetabelianNilpotent) {
    std::vector<GradedVector> generator_images(r);
    for (std::size_t j = 0; j < r; ++j) {
      generator_images[j].degree = 1;
      for (std::size_t i = 0; i < r; ++i) generator_images[j].add({static_cast<int>(i)}, a(i, j));
    }
    // image of each basis tuple of the previous degree; a tuple's prefix is a tuple
    std::map<BasisElement, GradedVector> previous;
    for (std::size_t j = 0; j < r; ++j) previous.emplace(BasisElement{static_cast<int>(j)}, generator_images[j]);
    for (int degree = 2; degree <= max_degree; ++degree) {
      const auto& b = basis(degree);
      std::map<BasisElement, GradedVector> current;
      IntMatrix m(b.size(), b.size());
      for (std::size_t col = 0; col < b.size(); ++col) {
        const BasisElement& t = b[col];
        const BasisElement prefix(t.begin(), t.end() - 1);
        const GradedVector image = bracket(previous.at(prefix), generator_images[static_cast<std::size_t>(t.back())]);
        for (const auto& [key, c] : image.coords) m(index_of(key), col) = c;
        current.emplace(t, image);
      }
      previous = std::move(current);
      out.push_back(std::move(m));
    }
    return out;
  }

  LyndonAlgebra algebra(variant_.rank, budgets_);
  auto leaf = [&](int letter) {
    Assoc col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = a(i, static_cast<std::size_t>(letter));
    return col;
  };
  std::map<BasisElement, Assoc> image_memo;
  for (int degree = 2; degree <= max_degree; ++degree) {
    const auto& b = basis(degree);
    IntMatrix m(b.size(), b.size());
    for (std::size_t col = 0; col < b.size(); ++col) {
      Assoc image = algebra.expand(b[col], leaf, image_memo);
      GradedVector v;
      {
        std::lock_guard lock(cache_->guard);
        v = algebra.reduce(std::move(image), degree, cache_->lyndon_expansion);
      }
      for (const auto& [key, c] : v.coords) m(index_of(key), col) = c;
    }
    out.push_back(std::move(m));
  }
  return out;
}

IntMatrix LieRing::induced_matrix(const IntMatrix& a, int degree) const {
  return induced_matrices(a, degree).back();
}

std::vector<BasisElement> basis(const GroupVariant& v, int degree) { return LieRing(v).basis(degree); }

GradedVector bracket(const GradedVector& u, const GradedVector& w, const GroupVariant& v) {
  return LieRing(v).bracket(u, w);
}

IntMatrix induced_matrix(const IntMatrix& a, const GroupVariant& v, int degree) {
  return LieRing(v).induced_matrix(a, degree);
}

}  // namespace rinf
