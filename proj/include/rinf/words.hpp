#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rinf {

using Generator = std::uint64_t;
using Exponent = std::int64_t;

struct Syllable {
  Generator gen = 0;
  Exponent exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Element of the free group on x_0, x_1, ... stored as a freely reduced
/// sequence of syllables x_g^e: adjacent generators differ and no e is zero.
class Word {
 public:
  Word() = default;

  /// Freely reduces an arbitrary syllable sequence.
  static Word reduce(std::span<const Syllable> raw);
  static Word reduce(std::initializer_list<Syllable> raw) {
    return reduce(std::span<const Syllable>(raw.begin(), raw.size()));
  }
  static Word generator(Generator g, Exponent e = 1);

  bool is_identity() const noexcept { return syllables_.empty(); }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  /// Number of letters, i.e. sum of |exponent|.
  std::uint64_t length() const noexcept;

  Word inverse() const;
  Word pow(Exponent e) const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.syllables_.begin(), a.syllables_.end(), b.syllables_.begin(), b.syllables_.end(),
        [](const Syllable& x, const Syllable& y) {
          if (auto c = x.gen <=> y.gen; c != 0) return c;
          return x.exp <=> y.exp;
        });
  }

  /// Human form, e.g. "x0^2 x1^-1"; the identity prints as "1".
  std::string to_string() const;
  /// Accepts the human form; tokens may be separated by spaces or '*'.
  static Word parse(std::string_view text);

 private:
  void push(Syllable s);
  std::vector<Syllable> syllables_;
};

/// [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);
Exponent exponent_sum(const Word& w);
std::map<Generator, Exponent> abelianize(const Word& w);
/// Largest generator index occurring in w, plus one (0 for the identity).
Generator support_bound(const Word& w);

/// Assignment x_i -> word, either a finite table or a lazily evaluated rule.
class GeneratorMap {
 public:
  using Rule = std::function<Word(Generator)>;

  GeneratorMap() = default;
  static GeneratorMap identity();
  static GeneratorMap finite(std::map<Generator, Word> table);
  static GeneratorMap lazy(Rule rule);

  /// Image of x_i; throws UndefinedGenerator for indices a finite map lacks.
  Word operator()(Generator i) const;

  /// Composition (this after inner): x -> this(inner(x)).
  GeneratorMap after(const GeneratorMap& inner) const;

 private:
  explicit GeneratorMap(Rule rule) : rule_(std::move(rule)) {}
  Rule rule_;
};

/// Homomorphic extension of m applied to w.
Word apply_map(const GeneratorMap& m, const Word& w);

}  // namespace rinf
