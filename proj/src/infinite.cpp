#include "rinf/infinite.hpp"

#include <algorithm>
#include <set>

#include "rinf/errors.hpp"

namespace rinf {

namespace {

// Letters are coded 2g for x_g and 2g + 1 for x_g^-1.
std::vector<std::uint64_t> letters_of(const Word& w) {
  std::vector<std::uint64_t> out;
  for (const Syllable& s : w.syllables()) {
    const std::uint64_t code = 2 * s.gen + (s.exp < 0 ? 1 : 0);
    const auto reps = static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
    out.insert(out.end(), reps, code);
  }
  return out;
}

Integer ipow(std::uint64_t base, std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Reduced continuations of length t after a fixed letter, over m generators,
// given whether generator m-1 has already appeared.
Integer completions(std::uint64_t m, std::uint64_t t, bool top_seen) {
  const Integer all = ipow(2 * m - 1, t);
  if (top_seen) return all;
  if (m == 1) return 0;  // x_0 is the top generator, so it is always seen
  return all - ipow(2 * m - 3, t);
}

// Reduced words of length l >= 1 over x_0..x_{m-1} that involve x_{m-1}.
Integer count_words(std::uint64_t l, std::uint64_t m) {
  Integer all = ipow(2 * m - 1, l - 1) * (2 * m);
  if (m >= 2) all -= ipow(2 * m - 3, l - 1) * (2 * m - 2);
  return all;
}

// Words of weight w = length + largest index + 1.
Integer count_weight(std::uint64_t w) {
  Integer total = 0;
  for (std::uint64_t l = 1; l + 1 <= w; ++l) total += count_words(l, w - l);
  return total;
}

std::uint64_t to_position(const Integer& z) {
  if (z >= (Integer(1) << 63)) throw BudgetExceeded("theta_position", UINT64_MAX, (std::uint64_t{1} << 63) - 1);
  return z.get_ui();
}

}  // namespace

ThetaScheme::ThetaScheme(const Budgets& budgets) : budgets_(budgets) {}

Word ThetaScheme::word_at(std::uint64_t k) const {
  if (k == 0) return Word();
  Integer rest = k - 1;
  std::uint64_t weight = 2;
  for (;; ++weight) {
    const Integer c = count_weight(weight);
    if (rest < c) break;
    rest -= c;
  }
  std::uint64_t length = 1;
  for (;; ++length) {
    const Integer c = count_words(length, weight - length);
    if (rest < c) break;
    rest -= c;
  }
  if (length > budgets_.word_letters) throw BudgetExceeded("word_letters", length, budgets_.word_letters);
  const std::uint64_t m = weight - length;
  std::vector<Syllable> raw;
  bool top_seen = false;
  std::uint64_t prev = UINT64_MAX;
  for (std::uint64_t pos = 0; pos < length; ++pos) {
    const std::uint64_t t = length - pos - 1;
    for (std::uint64_t code = 0; code < 2 * m; ++code) {
      if (prev != UINT64_MAX && code == (prev ^ 1)) continue;
      const bool seen = top_seen || code / 2 == m - 1;
      const Integer n = completions(m, t, seen);
      if (rest < n) {
        raw.push_back({code / 2, code % 2 ? -1 : 1});
        top_seen = seen;
        prev = code;
        break;
      }
      rest -= n;
    }
  }
  return Word::reduce(raw);
}

std::uint64_t ThetaScheme::position(const Word& w) const {
  if (w.is_identity()) return 0;
  if (w.length() > budgets_.word_letters) throw BudgetExceeded("word_letters", w.length(), budgets_.word_letters);
  const auto letters = letters_of(w);
  const std::uint64_t length = letters.size();
  const std::uint64_t m = support_bound(w);
  const std::uint64_t weight = length + m;
  Integer pos = 1;
  for (std::uint64_t v = 2; v < weight; ++v) pos += count_weight(v);
  for (std::uint64_t l = 1; l < length; ++l) pos += count_words(l, weight - l);
  bool top_seen = false;
  std::uint64_t prev = UINT64_MAX;
  for (std::uint64_t p = 0; p < length; ++p) {
    const std::uint64_t t = length - p - 1;
    for (std::uint64_t code = 0; code < letters[p]; ++code) {
      if (prev != UINT64_MAX && code == (prev ^ 1)) continue;
      pos += completions(m, t, top_seen || code / 2 == m - 1);
    }
    top_seen = top_seen || letters[p] / 2 == m - 1;
    prev = letters[p];
  }
  return to_position(pos);
}

std::uint64_t ThetaScheme::placement(std::uint64_t k) const {
  if (k >= budgets_.theta_cap) return k + 1;
  std::lock_guard lock(guard_);
  while (replayed_.size() <= k) {
    const std::uint64_t j = replayed_.size();
    const std::uint64_t nk = support_bound(word_at(j));
    const std::uint64_t prev = j == 0 ? 0 : replayed_.back() + 1;  // p_{-1} + 1 = 0
    const std::uint64_t p = std::max(prev, nk + 1);
    if (p != j + 1) throw VerificationFailure("placement rule diverged from p_k = k + 1 at k = " + std::to_string(j));
    replayed_.push_back(p);
  }
  return replayed_[k];
}

Word ThetaScheme::theta(Generator i) const {
  if (i == 0) return Word();
  const std::uint64_t k = i - 1;
  if (placement(k) != i) return Word();
  return word_at(k);
}

Generator ThetaScheme::theta_inverse(const Word& w) const { return placement(position(w)); }

struct InfiniteAutomorphism::Memo {
  std::mutex guard;
  std::map<Generator, Word> image;
  std::map<Generator, Word> inverse;
};

InfiniteAutomorphism::InfiniteAutomorphism(InfiniteKind kind, unsigned n, std::shared_ptr<const ThetaScheme> scheme,
                                           const Budgets& budgets)
    : kind_(kind), n_(n), scheme_(std::move(scheme)), budgets_(budgets), memo_(std::make_shared<Memo>()) {}

InfiniteAutomorphism InfiniteAutomorphism::phi4(const Budgets& budgets) {
  return InfiniteAutomorphism(InfiniteKind::Phi4, 0, nullptr, budgets);
}

InfiniteAutomorphism InfiniteAutomorphism::phi5(std::shared_ptr<const ThetaScheme> scheme, const Budgets& budgets) {
  if (!scheme) throw InputError("phi5 needs a theta scheme");
  return InfiniteAutomorphism(InfiniteKind::Phi5, 0, std::move(scheme), budgets);
}

InfiniteAutomorphism InfiniteAutomorphism::phi_n(unsigned n, std::shared_ptr<const ThetaScheme> scheme,
                                                 const Budgets& budgets) {
  if (!scheme) throw InputError("phi_n needs a theta scheme");
  if (n < 1) throw InputError("phi_n needs n >= 1");
  return InfiniteAutomorphism(InfiniteKind::PhiN, n, std::move(scheme), budgets);
}

unsigned InfiniteAutomorphism::twist_exponent(Generator k) const {
  if (kind_ != InfiniteKind::PhiN) return 0;
  const Exponent e = exponent_sum(scheme_->theta(k)) % static_cast<Exponent>(n_);
  return static_cast<unsigned>(e < 0 ? e + static_cast<Exponent>(n_) : e);
}

Word InfiniteAutomorphism::image(Generator i) const {
  if (kind_ == InfiniteKind::Phi4) return i == 0 ? Word::generator(0) : Word::generator(i - 1) * Word::generator(i);
  {
    std::lock_guard lock(memo_->guard);
    if (auto it = memo_->image.find(i); it != memo_->image.end()) return it->second;
  }
  Word out;
  if (kind_ == InfiniteKind::Phi5) {
    out = scheme_->theta(i) * Word::generator(i);
  } else {
    out = scheme_->theta(i).inverse() * Word::generator(i) *
          Word::generator(0, static_cast<Exponent>(twist_exponent(i)));
  }
  std::lock_guard lock(memo_->guard);
  return memo_->image.emplace(i, std::move(out)).first->second;
}

std::vector<Generator> InfiniteAutomorphism::inverse_dependencies(Generator i) const {
  if (kind_ == InfiniteKind::Phi4) return i == 0 ? std::vector<Generator>{} : std::vector<Generator>{i - 1};
  std::set<Generator> gens;
  const Word t = scheme_->theta(i);
  for (const Syllable& s : t.syllables()) gens.insert(s.gen);
  return {gens.begin(), gens.end()};
}

// Caller holds the memo lock and every dependency is memoized.
Word InfiniteAutomorphism::inverse_from_dependencies(Generator i) const {
  const auto& known = memo_->inverse;
  auto psi = [&](const Word& w) {
    Word out;
    for (const Syllable& s : w.syllables()) out *= known.at(s.gen).pow(s.exp);
    return out;
  };
  switch (kind_) {
    case InfiniteKind::Phi4:
      return i == 0 ? Word::generator(0) : known.at(i - 1).inverse() * Word::generator(i);
    case InfiniteKind::Phi5:
      return psi(scheme_->theta(i)).inverse() * Word::generator(i);
    case InfiniteKind::PhiN:
      return psi(scheme_->theta(i)) * Word::generator(i) *
             Word::generator(0, -static_cast<Exponent>(twist_exponent(i)));
  }
  return {};
}

Word InfiniteAutomorphism::inverse_image(Generator i) const {
  std::lock_guard lock(memo_->guard);
  auto& known = memo_->inverse;
  if (auto it = known.find(i); it != known.end()) return it->second;
  std::vector<Generator> stack{i};
  while (!stack.empty()) {
    const Generator t = stack.back();
    if (known.count(t)) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (Generator d : inverse_dependencies(t)) {
      if (known.count(d)) continue;
      ready = false;
      stack.push_back(d);
      if (stack.size() > budgets_.recursion_depth)
        throw BudgetExceeded("recursion_depth at x" + std::to_string(d), stack.size(), budgets_.recursion_depth);
    }
    if (!ready) continue;
    known.emplace(t, inverse_from_dependencies(t));
    stack.pop_back();
  }
  return known.at(i);
}

Word InfiniteAutomorphism::apply(const Word& w) const {
  Word out;
  for (const Syllable& s : w.syllables()) out *= image(s.gen).pow(s.exp);
  return out;
}

Word InfiniteAutomorphism::apply_inverse(const Word& w) const {
  Word out;
  for (const Syllable& s : w.syllables()) out *= inverse_image(s.gen).pow(s.exp);
  return out;
}

GeneratorMap InfiniteAutomorphism::map() const {
  return GeneratorMap::lazy([self = *this](Generator i) { return self.image(i); });
}

GeneratorMap InfiniteAutomorphism::inverse_map() const {
  return GeneratorMap::lazy([self = *this](Generator i) { return self.inverse_image(i); });
}

Word twisted_move(const InfiniteAutomorphism& a, const Word& w, const Word& u) {
  return u * w * a.apply(u).inverse();
}

TwistedWitness solve_trivial_class(const InfiniteAutomorphism& a, const Word& v) {
  if (a.kind() != InfiniteKind::Phi5) throw InputError("solve_trivial_class needs the Phi5 automorphism");
  TwistedWitness out;
  out.z = Word::generator(a.scheme()->theta_inverse(v.inverse()));
  if (out.z * a.apply(out.z).inverse() != v)
    throw VerificationFailure("v != z phi(z)^-1 for z = " + out.z.to_string());
  out.verified = true;
  return out;
}

TwistedWitness class_of(const InfiniteAutomorphism& a, const Word& w) {
  if (a.kind() != InfiniteKind::PhiN) throw InputError("class_of needs a PhiN automorphism");
  const auto n = static_cast<Exponent>(a.modulus());
  const Exponent k = ((exponent_sum(w) % n) + n) % n;
  TwistedWitness out;
  out.class_index = static_cast<unsigned>(k);
  if (!w.is_identity()) out.z = Word::generator(a.scheme()->theta_inverse(w));
  if (out.z * Word::generator(0, k) * a.apply(out.z).inverse() != w)
    throw VerificationFailure("w != z x0^k phi(z)^-1 for z = " + out.z.to_string());
  out.verified = true;
  return out;
}

void InfiniteLieElement::add(const std::vector<Generator>& key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coords.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coords.erase(it);
}

std::string InfiniteLieElement::to_string() const {
  if (coords.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : coords) {
    std::string term = degree == 1 ? "x" + std::to_string(key[0])
                                   : "[x" + std::to_string(key[0]) + ",x" + std::to_string(key[1]) + "]";
    const Integer mag = abs(c);
    const std::string coeff = mag == 1 ? "" : rinf::to_string(mag) + "*";
    if (out.empty()) out = (c < 0 ? "-" : "") + coeff + term;
    else out += (c < 0 ? " - " : " + ") + coeff + term;
  }
  return out;
}

namespace {

void add_bracket(InfiniteLieElement& out, Generator a, Generator b, const Integer& c) {
  if (a == b) return;
  if (a > b) out.add({a, b}, c);
  else out.add({b, a}, -c);
}

InfiniteLieElement bracket_with_generator(Generator i, const InfiniteLieElement& w) {
  InfiniteLieElement out;
  out.degree = 2;
  for (const auto& [key, c] : w.coords) add_bracket(out, i, key[0], c);
  return out;
}

InfiniteLieElement& accumulate(InfiniteLieElement& into, const InfiniteLieElement& x, const Integer& scale = 1) {
  for (const auto& [key, c] : x.coords) into.add(key, scale * c);
  return into;
}

InfiniteLieElement solve_degree1(const InfiniteLieElement& y) {
  InfiniteLieElement w;
  w.degree = 1;
  for (const auto& [key, c] : y.coords) w.add({key[0] + 1}, -c);
  return w;
}

// z with (Id - phi_*) z = [x_i, y], for y of degree 1.
InfiniteLieElement solve_bracket(Generator i, const InfiniteLieElement& y, std::size_t depth, std::size_t limit) {
  if (depth > limit) throw BudgetExceeded("recursion_depth", depth, limit);
  const InfiniteLieElement w = solve_degree1(y);
  InfiniteLieElement z = bracket_with_generator(i, w);
  if (i > 0) accumulate(z, solve_bracket(i - 1, phi4_push(w), depth + 1, limit));
  return z;
}

}  // namespace

InfiniteLieElement phi4_push(const InfiniteLieElement& x) {
  InfiniteLieElement out;
  out.degree = x.degree;
  auto image = [](Generator g) {
    std::vector<Generator> terms{g};
    if (g > 0) terms.push_back(g - 1);
    return terms;
  };
  for (const auto& [key, c] : x.coords) {
    if (x.degree == 1) {
      for (Generator g : image(key[0])) out.add({g}, c);
    } else {
      for (Generator a : image(key[0]))
        for (Generator b : image(key[1])) add_bracket(out, a, b, c);
    }
  }
  return out;
}

InfiniteLieElement solve_graded(const InfiniteAutomorphism& a, const InfiniteLieElement& target) {
  if (a.kind() != InfiniteKind::Phi4) throw InputError("solve_graded is defined for the Phi4 automorphism");
  if (target.degree < 1 || target.degree > 2)
    throw InputError("solve_graded handles degrees 1 and 2, got " + std::to_string(target.degree));
  for (const auto& [key, c] : target.coords)
    if (key.size() != static_cast<std::size_t>(target.degree) || (target.degree == 2 && key[0] <= key[1]))
      throw InputError("malformed graded target");

  InfiniteLieElement y;
  y.degree = target.degree;
  if (target.degree == 1) {
    y = solve_degree1(target);
  } else {
    for (const auto& [key, c] : target.coords) {
      InfiniteLieElement gen;
      gen.degree = 1;
      gen.add({key[1]}, 1);
      accumulate(y, solve_bracket(key[0], gen, 0, Budgets::defaults().recursion_depth), c);
    }
  }
  InfiniteLieElement check = y;
  accumulate(check, phi4_push(y), -1);
  if (check != target) throw VerificationFailure("(Id - phi)(y) differs from the target");
  return y;
}

IntMatrix phi4_truncated_matrix(std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 1; i < n; ++i) m(i - 1, i) = 1;
  return m;
}

}  // namespace rinf
