#include "rinf/reidemeister.hpp"

#include <algorithm>
#include <cctype>

#include "rinf/errors.hpp"
#include "rinf/intmat.hpp"
#include "rinf/pisot.hpp"

namespace rinf {

namespace {

void require_automorphism(const IntMatrix& a, int rank) {
  if (!a.is_square() || a.rows() == 0)
    throw InputError("expected a square matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  if (rank > 0 && a.rows() != static_cast<std::size_t>(rank))
    throw InputError("matrix size " + std::to_string(a.rows()) + " does not match rank " + std::to_string(rank));
  const Integer d = det(a);
  if (abs(d) != 1) throw InputError("|det A| = " + to_string(Integer(abs(d))) + ", not an automorphism");
}

// Smith-form cross-check is only run on levels up to this size.
constexpr std::size_t kSmithCheckDim = 64;

}  // namespace

RInfinityCheck is_R_infinite(const IntMatrix& a, const GroupVariant& v, const Budgets& budgets) {
  v.validate();
  require_automorphism(a, v.rank);
  LieRing ring(v, budgets);
  RInfinityCheck out;
  out.report.variant = v;
  const auto matrices = ring.induced_matrices(a, v.cls);
  for (int i = 1; i <= v.cls; ++i) {
    const IntMatrix& m = matrices[static_cast<std::size_t>(i - 1)];
    LevelReport level{i, m.rows(), det(minus_identity(m))};
    out.r_infinite = out.r_infinite || level.det_minus_identity == 0;
    out.report.levels.push_back(std::move(level));
  }
  return out;
}

std::optional<Integer> reidemeister_number(const IntMatrix& a, const GroupVariant& v, const Budgets& budgets) {
  v.validate();
  require_automorphism(a, v.rank);
  const auto matrices = LieRing(v, budgets).induced_matrices(a, v.cls);
  Integer product = 1;
  for (const IntMatrix& m : matrices) {
    const IntMatrix shifted = IntMatrix::identity(m.rows()) - m;
    const Integer d = abs(det(shifted));
    if (d == 0) return std::nullopt;
    if (m.rows() <= kSmithCheckDim && cokernel_order(shifted) != d)
      throw VerificationFailure("cokernel order disagrees with |det(I - M)|");
    product *= d;
  }
  return product;
}

std::optional<unsigned> has_product_one(const IntMatrix& a, unsigned kmax, const Budgets& budgets) {
  if (!a.is_square() || a.rows() == 0) throw InputError("has_product_one: expected a square matrix");
  for (unsigned k = 1; k <= kmax; ++k)
    if (is_singular(minus_identity(sym_power(a, k, budgets)))) return k;
  return std::nullopt;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::N: return "N";
    case Family::M: return "M";
    case Family::S: return "S";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'N': return Family::N;
      case 'M': return Family::M;
      case 'S': return Family::S;
    }
  }
  throw InputError("unknown family '" + std::string(text) + "' (expected N, M or S)");
}

namespace {

std::size_t largest_level(const GroupVariant& v) {
  std::uint64_t largest = 0;
  for (int i = 1; i <= v.cls; ++i)
    largest = std::max(largest, v.kind == GroupKind::MetabelianNilpotent ? chen_dimension(v.rank, i)
                                                                          : lyndon_dimension(v.rank, i));
  return static_cast<std::size_t>(largest);
}

// det(M_{2r} - I) for A_r on M_{r,2r}, the level where det(A)^2 appears.
std::optional<LevelReport> singular_level_certificate(int r, const Budgets& budgets) {
  const GroupVariant m{GroupKind::MetabelianNilpotent, r, 2 * r};
  if (chen_dimension(r, 2 * r) > budgets.verify_dim) return std::nullopt;
  const IntMatrix top = LieRing(m, budgets).induced_matrix(witness_matrix(r), 2 * r);
  return LevelReport{2 * r, top.rows(), det(minus_identity(top))};
}

void attach_finite_witness(RInfinityVerdict& out, const GroupVariant& v, const Budgets& budgets) {
  const IntMatrix a = witness_matrix(out.rank);
  out.witness = a;
  out.verified = true;
  if (sym_power_dimension(static_cast<std::size_t>(out.rank), static_cast<unsigned>(v.cls)) <= budgets.sym_power_dim) {
    out.product_one_first_k = has_product_one(a, static_cast<unsigned>(v.cls), budgets);
    out.checks.push_back("has_product_one");
    if (out.product_one_first_k) throw VerificationFailure("witness has an eigenvalue product equal to 1");
  } else {
    out.verified = false;
  }
  if (largest_level(v) <= budgets.verify_dim) {
    auto check = is_R_infinite(a, v, budgets);
    out.checks.push_back("is_R_infinite(" + v.to_string() + ")");
    if (check.r_infinite) throw VerificationFailure("witness matrix has an eigenvalue 1 on some level");
    out.report = std::move(check.report);
    out.verified = true;
  }
}

void attach_singular_level(RInfinityVerdict& out, const Budgets& budgets) {
  out.singular_level = singular_level_certificate(out.rank, budgets);
  if (!out.singular_level) return;
  out.checks.push_back("det(M_2r - I) on " +
                       GroupVariant{GroupKind::MetabelianNilpotent, out.rank, 2 * out.rank}.to_string());
  if (out.singular_level->det_minus_identity != 0)
    throw VerificationFailure("det(M_2r - I) is non-zero for the witness matrix");
  out.verified = true;
}

}  // namespace

RInfinityVerdict classify(Family family, int rank, int parameter, const Budgets& budgets) {
  if (rank < 2) throw InputError("rank must be at least 2, got " + std::to_string(rank));
  if (parameter < 1) throw InputError("parameter must be at least 1, got " + std::to_string(parameter));
  RInfinityVerdict out;
  out.family = family;
  out.rank = rank;
  out.parameter = parameter;

  if (family == Family::S) {
    if (parameter == 1) {
      // S_{r,1} is Z^r; R(A_r) = |det(I - A_r)| is finite.
      out.has_R_infinity = false;
      out.reason = "abelian: S(r,1) = Z^r and det(I - A_r) != 0";
      out.witness = witness_matrix(rank);
      const GroupVariant z{GroupKind::MetabelianNilpotent, rank, 1};
      auto check = is_R_infinite(*out.witness, z, budgets);
      if (check.r_infinite) throw VerificationFailure("witness fixes a vector of Z^r");
      out.report = std::move(check.report);
      out.checks.push_back("is_R_infinite(Z^r)");
      out.verified = true;
      return out;
    }
    out.has_R_infinity = true;
    out.reason = "M(r,2r) is a characteristic quotient of S(r,k) for k >= 2 and has R_infinity";
    attach_singular_level(out, budgets);
    return out;
  }

  const GroupVariant v{family == Family::N ? GroupKind::FreeNilpotent : GroupKind::MetabelianNilpotent, rank, parameter};
  if (parameter >= 2 * rank) {
    out.has_R_infinity = true;
    out.reason = "c >= 2r: the 2r-fold eigenvalue product det(A)^2 = 1 gives eigenvalue 1 on level 2r";
    attach_singular_level(out, budgets);
    return out;
  }
  out.has_R_infinity = false;
  out.reason = "c < 2r: witness A_r has no k-fold eigenvalue product equal to 1 for k <= c";
  attach_finite_witness(out, v, budgets);
  return out;
}

GeneratorMap LiftCertificate::map() const {
  std::map<Generator, Word> table;
  for (std::size_t j = 0; j < images.size(); ++j) table.emplace(j, images[j]);
  return GeneratorMap::finite(std::move(table));
}

namespace {

Exponent small_multiplier(const Integer& q) {
  if (!q.fits_slong_p()) throw InputError("certify_onto_lift: elimination multiplier exceeds 64 bits");
  return q.get_si();
}

}  // namespace

LiftCertificate certify_onto_lift(const IntMatrix& a) {
  require_automorphism(a, 0);
  const std::size_t n = a.rows();
  IntMatrix m = a;
  // Column operations with A * E_1 * ... * E_k = I, stored as the inverse moves
  // so that A = E_k^-1 ... E_1^-1.
  std::vector<NielsenStep> ops;
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < n; ++i) m(i, dst) += q * m(i, src);
    ops.push_back({NielsenStep::Kind::Transvection, dst, src, -small_multiplier(q)});
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, x), m(i, y));
    ops.push_back({NielsenStep::Kind::Swap, x, y, 0});
  };
  auto negate_col = [&](std::size_t x) {
    for (std::size_t i = 0; i < n; ++i) m(i, x) = -m(i, x);
    ops.push_back({NielsenStep::Kind::Invert, x, x, 0});
  };

  for (std::size_t p = 0; p < n; ++p) {
    // Euclid across columns p..n-1 of row p
    for (;;) {
      std::size_t pivot = n;
      for (std::size_t j = p; j < n; ++j)
        if (m(p, j) != 0 && (pivot == n || abs(m(p, j)) < abs(m(p, pivot)))) pivot = j;
      if (pivot == n) throw VerificationFailure("unimodular matrix lost rank during elimination");
      bool done = true;
      for (std::size_t j = p; j < n; ++j) {
        if (j == pivot || m(p, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(p, j).get_mpz_t(), m(p, pivot).get_mpz_t());
        add_col(j, pivot, -q);
        if (m(p, j) != 0) done = false;
      }
      if (done) {
        if (pivot != p) swap_cols(p, pivot);
        break;
      }
    }
    if (m(p, p) == -1) negate_col(p);
    if (m(p, p) != 1) throw VerificationFailure("diagonal entry is not a unit");
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != 0) add_col(j, i, -m(i, j));
  if (m != IntMatrix::identity(n)) throw VerificationFailure("column reduction did not reach the identity");

  LiftCertificate cert;
  cert.matrix = a;
  cert.steps.assign(ops.rbegin(), ops.rend());
  std::vector<Word> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = Word::generator(j);
  // images = steps[0] o ... o steps[t]; fold in each step on the right.
  for (const NielsenStep& s : cert.steps) {
    switch (s.kind) {
      case NielsenStep::Kind::Transvection:
        images[s.target] = images[s.source].pow(s.multiplier) * images[s.target];
        break;
      case NielsenStep::Kind::Swap:
        std::swap(images[s.target], images[s.source]);
        break;
      case NielsenStep::Kind::Invert:
        images[s.target] = images[s.target].inverse();
        break;
    }
  }
  cert.images = std::move(images);
  for (std::size_t j = 0; j < n; ++j) {
    const auto ab = abelianize(cert.images[j]);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = ab.find(i);
      if ((it == ab.end() ? Integer(0) : Integer(it->second)) != a(i, j))
        throw VerificationFailure("lift does not abelianize to the input matrix");
    }
  }
  return cert;
}

}  // namespace rinf
