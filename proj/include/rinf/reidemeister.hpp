#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rinf/budget.hpp"
#include "rinf/int_matrix.hpp"
#include "rinf/liering.hpp"
#include "rinf/words.hpp"

namespace rinf {

/// One graded level: det(M_i - I) for the induced matrix M_i on L_i.
struct LevelReport {
  int degree = 1;
  std::size_t dim = 0;
  Integer det_minus_identity;
};

struct SpectralReport {
  GroupVariant variant;
  std::vector<LevelReport> levels;  // degrees 1..c in order
};

struct RInfinityCheck {
  bool r_infinite = false;
  SpectralReport report;
};

/// R(phi) is infinite iff some induced level has eigenvalue 1, decided by
/// exact determinants. Throws InputError unless A is r x r with |det A| = 1.
RInfinityCheck is_R_infinite(const IntMatrix& a, const GroupVariant& v, const Budgets& budgets = Budgets::defaults());

/// Product of |det(I - M_i)| over all levels, or nullopt when infinite.
/// Each factor is re-derived as a cokernel order when the level is small.
std::optional<Integer> reidemeister_number(const IntMatrix& a, const GroupVariant& v,
                                           const Budgets& budgets = Budgets::defaults());

/// Smallest k <= kmax with det(Sym^k(A) - I) = 0, i.e. some k-fold product of
/// eigenvalues equal to 1.
std::optional<unsigned> has_product_one(const IntMatrix& a, unsigned kmax, const Budgets& budgets = Budgets::defaults());

enum class Family { N, M, S };
std::string to_string(Family f);
/// Accepts "N", "M", "S" (case-insensitive).
Family parse_family(std::string_view text);

struct RInfinityVerdict {
  Family family = Family::M;
  int rank = 2;
  int parameter = 1;  // class c for N and M, derived length k for S
  bool has_R_infinity = false;
  std::string reason;
  /// Negative verdicts: an automorphism with finitely many classes.
  std::optional<IntMatrix> witness;
  /// Positive verdicts: level 2r of M_{r,2r} for the witness matrix, where
  /// det(M_{2r} - I) vanishes.
  std::optional<LevelReport> singular_level;
  /// Spectral data backing the verdict when it was recomputed within budget.
  std::optional<SpectralReport> report;
  std::optional<unsigned> product_one_first_k;
  bool verified = false;
  std::vector<std::string> checks;  // names of the re-checks that ran
};

RInfinityVerdict classify(Family family, int rank, int parameter, const Budgets& budgets = Budgets::defaults());

/// Elementary automorphism of F_r: transvection x_target -> x_source^t x_target,
/// swap of two generators, or inversion of one.
struct NielsenStep {
  enum class Kind { Transvection, Swap, Invert };
  Kind kind = Kind::Transvection;
  std::size_t target = 0;
  std::size_t source = 0;
  Exponent multiplier = 0;
};

struct LiftCertificate {
  IntMatrix matrix;
  /// The lift is steps[0] o steps[1] o ... (rightmost applied first).
  std::vector<NielsenStep> steps;
  /// Image of each x_j; abelianizes to column j of the matrix.
  std::vector<Word> images;
  GeneratorMap map() const;
};

/// Writes A in GL(r, Z) as a product of elementary matrices and lifts each to a
/// Nielsen move, then re-checks the abelianization of the composite.
LiftCertificate certify_onto_lift(const IntMatrix& a);

}  // namespace rinf
