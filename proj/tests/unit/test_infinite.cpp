#include <algorithm>
#include <set>

#include "doctest.h"
#include "rinf/errors.hpp"
#include "rinf/infinite.hpp"
#include "rinf/intmat.hpp"
#include "support.hpp"

using namespace rinf;
using namespace testing_support;

namespace {

std::shared_ptr<const ThetaScheme> scheme() {
  static auto s = std::make_shared<const ThetaScheme>();
  return s;
}

Word w(const char* text) { return Word::parse(text); }

// All reduced words of weight <= max_weight, sorted by (weight, length, letters).
std::vector<Word> brute_force_enumeration(std::uint64_t max_weight) {
  using Letters = std::vector<std::uint64_t>;
  std::vector<std::tuple<std::uint64_t, std::size_t, Letters>> all{{0, 0, {}}};
  std::function<void(Letters&)> grow = [&](Letters& cur) {
    std::uint64_t top = 0;
    for (auto c : cur) top = std::max(top, c / 2 + 1);
    if (!cur.empty()) all.emplace_back(cur.size() + top, cur.size(), cur);
    for (std::uint64_t code = 0; code < 2 * max_weight; ++code) {
      if (!cur.empty() && code == (cur.back() ^ 1)) continue;
      const std::uint64_t weight = cur.size() + 1 + std::max(top, code / 2 + 1);
      if (weight > max_weight) continue;
      cur.push_back(code);
      grow(cur);
      cur.pop_back();
    }
  };
  Letters start;
  grow(start);
  std::sort(all.begin(), all.end());
  std::vector<Word> out;
  for (const auto& [weight, len, letters] : all) {
    std::vector<Syllable> raw;
    for (auto c : letters) raw.push_back({c / 2, c % 2 ? -1 : 1});
    out.push_back(Word::reduce(raw));
  }
  return out;
}

InfiniteLieElement deg1(std::initializer_list<std::pair<Generator, long>> terms) {
  InfiniteLieElement e;
  for (const auto& [g, c] : terms) e.add({g}, c);
  return e;
}

}  // namespace

TEST_CASE("theta enumeration matches brute force") {
  const auto expected = brute_force_enumeration(7);
  for (std::uint64_t k = 0; k < expected.size(); ++k) {
    CHECK(scheme()->word_at(k) == expected[k]);
    CHECK(scheme()->position(expected[k]) == k);
  }
}

TEST_CASE("theta placements") {
  const auto& s = *scheme();
  CHECK(s.theta(0).is_identity());
  CHECK(s.word_at(0).is_identity());
  CHECK(s.placement(0) == 1);
  CHECK(s.theta(1).is_identity());
  CHECK(s.placement(1) == 2);
  CHECK(s.theta(2) == w("x0"));
  CHECK(s.theta_inverse(w("x0")) == 2);
  CHECK(s.word_at(2) == w("x0^-1"));
  CHECK(s.word_at(3) == w("x1"));
  for (std::uint64_t k = 0; k <= 1000; ++k) CHECK(s.theta_inverse(s.theta(s.placement(k))) == s.placement(k));
  std::uint64_t prev = 0;
  for (std::uint64_t k = 0; k < 5000; ++k) {
    const std::uint64_t p = s.placement(k);
    if (k > 0) CHECK(p > prev);
    prev = p;
    CHECK(support_bound(s.theta(p)) < p);
    CHECK(p > support_bound(s.word_at(k)));
  }
  // desk-scale surjectivity: every word of length <= 4 over x0..x2
  const auto words = brute_force_enumeration(7);
  std::size_t checked = 0;
  for (std::uint64_t len = 0; len <= 4; ++len)
    for (int trial = 0; trial < 200; ++trial) {
      const Word v = random_word(static_cast<int>(len), 2);
      const Generator i = s.theta_inverse(v);
      CHECK(s.theta(i) == v);
      ++checked;
    }
  CHECK(checked == 1000);
  // far beyond the replay cap the closed form still round-trips
  const Word big = w("x9 x3^-2 x7 x0 x9^-1 x2");
  CHECK(s.theta(s.theta_inverse(big)) == big);
}

TEST_CASE("automorphism images") {
  const auto phi4 = InfiniteAutomorphism::phi4();
  const auto phi5 = InfiniteAutomorphism::phi5(scheme());
  CHECK(phi4.apply(w("x2")) == w("x1 x2"));
  CHECK(phi5.apply(w("x0")) == w("x0"));
  CHECK(phi4.apply_inverse(w("x1 x2")) == w("x2"));
  CHECK(phi5.image(2) == w("x0 x2"));
  const auto phi3 = InfiniteAutomorphism::phi_n(3, scheme());
  CHECK(phi3.image(0) == w("x0"));
  CHECK(phi3.twist_exponent(2) == 1);
  CHECK(phi3.image(2) == w("x0^-1 x2 x0"));
}

TEST_CASE("bijectivity on random words") {
  std::vector<InfiniteAutomorphism> autos{InfiniteAutomorphism::phi4(), InfiniteAutomorphism::phi5(scheme()),
                                          InfiniteAutomorphism::phi_n(2, scheme()), InfiniteAutomorphism::phi_n(5, scheme())};
  for (const auto& a : autos)
    for (int trial = 0; trial < 1000; ++trial) {
      const Word x = random_word(10, 12);
      CHECK(a.apply_inverse(a.apply(x)) == x);
      CHECK(a.apply(a.apply_inverse(x)) == x);
    }
}

TEST_CASE("R(phi) = 1 witnesses") {
  const auto phi5 = InfiniteAutomorphism::phi5(scheme());
  CHECK(solve_trivial_class(phi5, w("x0^-1")).z == w("x2"));
  CHECK(solve_trivial_class(phi5, Word()).z == w("x1"));
  for (int trial = 0; trial < 1000; ++trial) {
    const Word v = random_word(8, 9);
    const auto sol = solve_trivial_class(phi5, v);
    CHECK(sol.verified);
    CHECK(sol.z * phi5.apply(sol.z).inverse() == v);
  }
  CHECK(twisted_move(phi5, Word(), w("x5")) == w("x5") * phi5.image(5).inverse());
  CHECK(twisted_move(phi5, Word(), w("x5")) == scheme()->theta(5).inverse());
  CHECK_THROWS_AS(solve_trivial_class(InfiniteAutomorphism::phi4(), Word()), InputError);
}

TEST_CASE("R(phi_n) = n") {
  for (unsigned n = 2; n <= 5; ++n) {
    const auto a = InfiniteAutomorphism::phi_n(n, scheme());
    CHECK(class_of(a, w("x0 x1 x0")).class_index == 3 % n);
    const auto one = class_of(a, Word());
    CHECK(one.class_index == 0);
    CHECK(one.z.is_identity());
    std::set<unsigned> reps;
    for (unsigned k = 0; k < n; ++k) reps.insert(class_of(a, Word::generator(0, k)).class_index);
    CHECK(reps.size() == n);
    for (int trial = 0; trial < 300; ++trial) {
      const Word x = random_word(8, 9);
      const auto c = class_of(a, x);
      CHECK(c.z * Word::generator(0, c.class_index) * a.apply(c.z).inverse() == x);
      const Word moved = twisted_move(a, x, random_word(6, 9));
      const auto mod = [n](Exponent e) { return ((e % static_cast<Exponent>(n)) + n) % n; };
      CHECK(mod(exponent_sum(moved)) == mod(exponent_sum(x)));
    }
  }
}

TEST_CASE("graded surjectivity for Phi4") {
  const auto phi4 = InfiniteAutomorphism::phi4();
  for (Generator i = 0; i < 6; ++i) CHECK(solve_graded(phi4, deg1({{i, 1}})) == deg1({{i + 1, -1}}));
  CHECK(solve_graded(phi4, InfiniteLieElement{}).is_zero());
  InfiniteLieElement t2;
  t2.degree = 2;
  t2.add({2, 1}, 1);
  const auto y = solve_graded(phi4, t2);
  InfiniteLieElement check = y;
  for (const auto& [key, c] : phi4_push(y).coords) check.add(key, -c);
  CHECK(check == t2);
  for (int trial = 0; trial < 100; ++trial) {
    InfiniteLieElement target;
    target.degree = 2;
    for (int k = 0; k < 3; ++k) {
      const auto a = static_cast<Generator>(uniform(1, 8));
      const auto b = static_cast<Generator>(uniform(0, static_cast<long>(a) - 1));
      target.add({a, b}, uniform(-4, 4));
    }
    CHECK_NOTHROW(solve_graded(phi4, target));
  }
  InfiniteLieElement bad;
  bad.degree = 3;
  CHECK_THROWS_AS(solve_graded(phi4, bad), InputError);
}

TEST_CASE("finite truncation of Phi4 has eigenvalue 1") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(det(minus_identity(phi4_truncated_matrix(n))) == 0);
}

TEST_CASE("recursion budget") {
  Budgets tight;
  tight.recursion_depth = 50;
  const auto phi4 = InfiniteAutomorphism::phi4(tight);
  CHECK_THROWS_AS(phi4.inverse_image(500), BudgetExceeded);
  for (Generator i = 0; i <= 500; i += 25) CHECK_NOTHROW(phi4.inverse_image(i));
}
