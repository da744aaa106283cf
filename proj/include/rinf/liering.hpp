#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rinf/budget.hpp"
#include "rinf/int_matrix.hpp"

namespace rinf {

enum class GroupKind {
  FreeNilpotent,        // N_{r,c}: Lyndon (Hall) basis
  MetabelianNilpotent,  // M_{r,c}: Chen basis
};

struct GroupVariant {
  GroupKind kind = GroupKind::MetabelianNilpotent;
  int rank = 2;
  int cls = 1;

  /// Throws InputError unless rank >= 2 and class >= 1.
  void validate() const;
  std::string to_string() const;
};

/// Index tuple of a basis bracket, 0-based internally.
/// Chen: left-normed [x_j1, x_j2, ..., x_ji] with j1 > j2 <= j3 <= ... <= ji.
/// Lyndon: the Lyndon word whose standard bracketing is the basis element.
using BasisElement = std::vector<int>;

/// Sparse element of the graded piece L_degree.
struct GradedVector {
  int degree = 1;
  std::map<BasisElement, Integer> coords;

  bool is_zero() const { return coords.empty(); }
  void add(const BasisElement& e, const Integer& c);
  friend bool operator==(const GradedVector&, const GradedVector&) = default;
  /// The degree-1 generator x_j (0-based).
  static GradedVector generator(int j);
};

/// Graded Lie ring of N_{r,c} or M_{r,c} up to degree c, with cached bases.
/// Cached data is guarded; concurrent use of one instance is safe.
class LieRing {
 public:
  explicit LieRing(GroupVariant variant, const Budgets& budgets = Budgets::defaults());

  const GroupVariant& variant() const noexcept { return variant_; }

  const std::vector<BasisElement>& basis(int degree) const;
  std::size_t dimension(int degree) const { return basis(degree).size(); }
  /// Position of e in basis(e.size()); throws InputError if e is not a basis element.
  std::size_t index_of(const BasisElement& e) const;

  /// Bilinear bracket rewritten to normal form; zero above the class.
  GradedVector bracket(const GradedVector& u, const GradedVector& w) const;

  /// Matrix of the graded automorphism induced by A on L_degree (columns are
  /// images of basis elements).
  IntMatrix induced_matrix(const IntMatrix& a, int degree) const;
  /// Induced matrices for degrees 1..max_degree, sharing intermediate work.
  std::vector<IntMatrix> induced_matrices(const IntMatrix& a, int max_degree) const;

  GradedVector to_vector(int degree, const std::vector<Integer>& column) const;
  std::vector<Integer> to_column(const GradedVector& v) const;

 private:
  struct Cache;
  void check_degree(int degree) const;

  GroupVariant variant_;
  Budgets budgets_;
  std::shared_ptr<Cache> cache_;
};

/// Free-function forms.
std::vector<BasisElement> basis(const GroupVariant& v, int degree);
GradedVector bracket(const GradedVector& u, const GradedVector& w, const GroupVariant& v);
IntMatrix induced_matrix(const IntMatrix& a, const GroupVariant& v, int degree);

/// Number of Chen tuples of length i over r letters: (i-1) C(r+i-2, i) for i >= 2.
std::uint64_t chen_dimension(int rank, int degree);
/// Necklace count (1/i) sum_{d|i} mu(d) r^{i/d}.
std::uint64_t lyndon_dimension(int rank, int degree);

}  // namespace rinf
