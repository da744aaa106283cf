#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rinf/budget.hpp"
#include "rinf/int_matrix.hpp"
#include "rinf/words.hpp"

namespace rinf {

/// Enumeration y_0, y_1, ... of all reduced words of F_inf and the map
/// theta(x_{p_k}) = y_k, theta(x_j) = 1 for unplaced j.
///
/// Words are ordered by weight (length + largest index + 1), then length, then
/// lexicographically with letters x0 < x0^-1 < x1 < x1^-1 < ...; every weight
/// class is finite, so each word gets a finite position. Placements follow
/// p_k = max(p_{k-1} + 1, n_k + 1) with n_k = 1 + largest index of y_k, which
/// in this order works out to p_k = k + 1. The rule is replayed and checked up
/// to the cap; beyond it the closed form is used.
class ThetaScheme {
 public:
  explicit ThetaScheme(const Budgets& budgets = Budgets::defaults());

  /// y_k. Throws BudgetExceeded if the word would exceed the letter budget.
  Word word_at(std::uint64_t k) const;
  /// k with y_k = w; throws BudgetExceeded if the position does not fit 63 bits.
  std::uint64_t position(const Word& w) const;
  /// p_k.
  std::uint64_t placement(std::uint64_t k) const;

  Word theta(Generator i) const;
  /// The placed index p_k with y_k = w.
  Generator theta_inverse(const Word& w) const;

  std::uint64_t cap() const noexcept { return budgets_.theta_cap; }

 private:
  Budgets budgets_;
  mutable std::mutex guard_;
  mutable std::vector<std::uint64_t> replayed_;  // p_0, p_1, ... checked so far
};

enum class InfiniteKind { Phi4, Phi5, PhiN };

/// Automorphism of F_inf given on generators:
///   Phi4: x_0 -> x_0, x_i -> x_{i-1} x_i
///   Phi5: x_i -> theta(x_i) x_i
///   PhiN: x_k -> theta(x_k)^-1 x_k x_0^{i(k)}, i(k) = exponent sum of theta(x_k) mod n
/// Generator images and inverse images are memoized and shared between copies.
class InfiniteAutomorphism {
 public:
  static InfiniteAutomorphism phi4(const Budgets& budgets = Budgets::defaults());
  static InfiniteAutomorphism phi5(std::shared_ptr<const ThetaScheme> scheme, const Budgets& budgets = Budgets::defaults());
  static InfiniteAutomorphism phi_n(unsigned n, std::shared_ptr<const ThetaScheme> scheme,
                                    const Budgets& budgets = Budgets::defaults());

  InfiniteKind kind() const noexcept { return kind_; }
  unsigned modulus() const noexcept { return n_; }
  const ThetaScheme* scheme() const noexcept { return scheme_.get(); }

  Word image(Generator i) const;
  /// psi(x_i) for the two-sided inverse psi; throws BudgetExceeded when the
  /// recursion through lower generators gets deeper than the budget.
  Word inverse_image(Generator i) const;

  Word apply(const Word& w) const;
  Word apply_inverse(const Word& w) const;
  GeneratorMap map() const;
  GeneratorMap inverse_map() const;

  /// i(k) for PhiN.
  unsigned twist_exponent(Generator k) const;

 private:
  struct Memo;
  InfiniteAutomorphism(InfiniteKind kind, unsigned n, std::shared_ptr<const ThetaScheme> scheme, const Budgets& budgets);
  std::vector<Generator> inverse_dependencies(Generator i) const;
  Word inverse_from_dependencies(Generator i) const;

  InfiniteKind kind_;
  unsigned n_ = 0;
  std::shared_ptr<const ThetaScheme> scheme_;
  Budgets budgets_;
  std::shared_ptr<Memo> memo_;
};

/// u w phi(u)^-1.
Word twisted_move(const InfiniteAutomorphism& a, const Word& w, const Word& u);

struct TwistedWitness {
  Word z;
  unsigned class_index = 0;
  bool verified = false;
};

/// z with v = z phi(z)^-1 for the Phi5 automorphism; checked before returning.
TwistedWitness solve_trivial_class(const InfiniteAutomorphism& a, const Word& v);
/// Class index k = exponent sum of w mod n and z with w = z x_0^k phi_n(z)^-1.
TwistedWitness class_of(const InfiniteAutomorphism& a, const Word& w);

/// Element of degree 1 or 2 of the free Lie ring on x_0, x_1, ...:
/// degree 1 keys are {i}, degree 2 keys are {a, b} with a > b for [x_a, x_b].
struct InfiniteLieElement {
  int degree = 1;
  std::map<std::vector<Generator>, Integer> coords;

  void add(const std::vector<Generator>& key, const Integer& c);
  bool is_zero() const { return coords.empty(); }
  friend bool operator==(const InfiniteLieElement&, const InfiniteLieElement&) = default;
  std::string to_string() const;
};

/// phi_* for Phi4 on degree 1 or 2.
InfiniteLieElement phi4_push(const InfiniteLieElement& x);

/// y with (Id - phi_*)(y) = target for Phi4, degrees 1 and 2 only; the result
/// is re-expanded and compared with the target before returning.
InfiniteLieElement solve_graded(const InfiniteAutomorphism& a, const InfiniteLieElement& target);

/// Abelianization of Phi4 restricted to x_0..x_{n-1}.
IntMatrix phi4_truncated_matrix(std::size_t n);

}  // namespace rinf
