#include "rinf/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "rinf/errors.hpp"

namespace rinf {

void Word::push(Syllable s) {
  if (s.exp == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == s.gen) {
    Exponent merged = 0;
    if (__builtin_add_overflow(syllables_.back().exp, s.exp, &merged))
      throw InputError("exponent overflow while reducing a word");
    if (merged == 0)
      syllables_.pop_back();
    else
      syllables_.back().exp = merged;
    return;
  }
  syllables_.push_back(s);
}

Word Word::reduce(std::span<const Syllable> raw) {
  Word w;
  w.syllables_.reserve(raw.size());
  for (const Syllable& s : raw) w.push(s);
  return w;
}

Word Word::generator(Generator g, Exponent e) {
  Word w;
  w.push({g, e});
  return w;
}

std::uint64_t Word::length() const noexcept {
  std::uint64_t n = 0;
  for (const Syllable& s : syllables_) n += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) w.syllables_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(Exponent e) const {
  if (e == 0 || is_identity()) return {};
  if (syllables_.size() == 1) return generator(syllables_[0].gen, syllables_[0].exp * e);
  const Word base = e > 0 ? *this : inverse();
  std::uint64_t n = static_cast<std::uint64_t>(e > 0 ? e : -e);
  Word result;
  for (std::uint64_t i = 0; i < n; ++i) result *= base;
  return result;
}

Word& Word::operator*=(const Word& b) {
  if (this == &b) {
    const Word copy = b;
    return *this *= copy;
  }
  for (const Syllable& s : b.syllables_) push(s);
  return *this;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w *= b;
  return w;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Syllable& s : syllables_) {
    if (!first) out << ' ';
    first = false;
    out << 'x' << s.gen;
    if (s.exp != 1) out << '^' << s.exp;
  }
  return out.str();
}

Word Word::parse(std::string_view text) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("cannot parse word '" + std::string(text) + "': " + why);
  };
  auto read_number = [&](bool allow_sign) -> std::string {
    std::string digits;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) digits += text[i++];
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    return digits;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c == '1') {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'X') throw fail("unexpected character");
    ++i;
    const std::string idx = read_number(false);
    if (idx.empty()) throw fail("missing generator index");
    Syllable s;
    try {
      s.gen = std::stoull(idx);
    } catch (const std::exception&) {
      throw fail("generator index out of range");
    }
    s.exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i < text.size() && text[i] == '(') ++i;
      const std::string e = read_number(true);
      if (e.empty() || e == "-" || e == "+") throw fail("missing exponent");
      try {
        s.exp = std::stoll(e);
      } catch (const std::exception&) {
        throw fail("exponent out of range");
      }
      if (i < text.size() && text[i] == ')') ++i;
    }
    raw.push_back(s);
  }
  return reduce(raw);
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Exponent exponent_sum(const Word& w) {
  Exponent total = 0;
  for (const Syllable& s : w.syllables()) total += s.exp;
  return total;
}

std::map<Generator, Exponent> abelianize(const Word& w) {
  std::map<Generator, Exponent> v;
  for (const Syllable& s : w.syllables()) {
    Exponent& slot = v[s.gen];
    slot += s.exp;
    if (slot == 0) v.erase(s.gen);
  }
  return v;
}

Generator support_bound(const Word& w) {
  Generator bound = 0;
  for (const Syllable& s : w.syllables()) bound = std::max(bound, s.gen + 1);
  return bound;
}

GeneratorMap GeneratorMap::identity() {
  return GeneratorMap([](Generator i) { return Word::generator(i); });
}

GeneratorMap GeneratorMap::finite(std::map<Generator, Word> table) {
  auto shared = std::make_shared<const std::map<Generator, Word>>(std::move(table));
  return GeneratorMap([shared](Generator i) {
    auto it = shared->find(i);
    if (it == shared->end()) throw UndefinedGenerator(i);
    return it->second;
  });
}

GeneratorMap GeneratorMap::lazy(Rule rule) { return GeneratorMap(std::move(rule)); }

Word GeneratorMap::operator()(Generator i) const {
  if (!rule_) throw UndefinedGenerator(i);
  return rule_(i);
}

GeneratorMap GeneratorMap::after(const GeneratorMap& inner) const {
  GeneratorMap outer = *this;
  return GeneratorMap([outer, inner](Generator i) { return apply_map(outer, inner(i)); });
}

Word apply_map(const GeneratorMap& m, const Word& w) {
  Word out;
  for (const Syllable& s : w.syllables()) out *= m(s.gen).pow(s.exp);
  return out;
}

}  // namespace rinf
