#include "rinf/json_io.hpp"

#include <limits>

#include "rinf/errors.hpp"

namespace rinf::json_io {

namespace {

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected a JSON array");
  return j;
}

}  // namespace

Json to_json(const Integer& z) { return z.get_str(); }

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return parse_integer(std::to_string(j.get<std::uint64_t>()));
    return parse_integer(std::to_string(j.get<std::int64_t>()));
  }
  throw InputError("expected an integer or a decimal string, got " + j.dump());
}

Json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) return Rational(integer_from_json(j));
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  const Integer num = parse_integer(std::string_view(s).substr(0, slash));
  const Integer den = parse_integer(std::string_view(s).substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in " + s);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Json to_json(const IntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  require_array(j, "matrix");
  if (j.empty()) throw InputError("matrix: no rows");
  std::vector<std::vector<Integer>> rows;
  for (const Json& row : j) {
    require_array(row, "matrix row");
    std::vector<Integer> r;
    for (const Json& e : row) r.push_back(integer_from_json(e));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const Integer& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  require_array(j, "polynomial");
  std::vector<Integer> coeffs;
  for (const Json& c : j) coeffs.push_back(integer_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

Json to_json(const Word& w) {
  Json out = Json::array();
  for (const Syllable& s : w.syllables()) out.push_back(Json::array({s.gen, s.exp}));
  return out;
}

Word word_from_json(const Json& j) {
  if (j.is_string()) return Word::parse(j.get<std::string>());
  require_array(j, "word");
  std::vector<Syllable> raw;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw InputError("word: expected [index, exponent] pairs, got " + pair.dump());
    if (!pair[0].is_number_unsigned()) throw InputError("word: negative generator index " + pair[0].dump());
    if (pair[1].is_number_unsigned() && pair[1].get<std::uint64_t>() > std::numeric_limits<std::int64_t>::max())
      throw InputError("word: exponent out of range " + pair[1].dump());
    raw.push_back({pair[0].get<Generator>(), pair[1].get<Exponent>()});
  }
  return Word::reduce(raw);
}

Word parse_word_text(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\n");
  if (start != std::string_view::npos && text[start] == '[') return word_from_json(parse_text(text));
  return Word::parse(text);
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json basis_to_json(const BasisElement& e) {
  Json out = Json::array();
  for (int j : e) out.push_back(j + 1);
  return out;
}

BasisElement basis_from_json(const Json& j) {
  require_array(j, "basis element");
  BasisElement e;
  for (const Json& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 1) throw InputError("basis element: indices are 1-based integers");
    e.push_back(x.get<int>() - 1);
  }
  return e;
}

Json to_json(const GroupVariant& v) { return v.to_string(); }

Json to_json(const LevelReport& l) {
  return Json{{"degree", l.degree}, {"dim", l.dim}, {"det", to_json(l.det_minus_identity)}};
}

Json to_json(const SpectralReport& s) {
  Json levels = Json::array();
  for (const LevelReport& l : s.levels) levels.push_back(to_json(l));
  return Json{{"variant", to_json(s.variant)}, {"levels", std::move(levels)}};
}

Json to_json(const RInfinityVerdict& v) {
  Json out{{"family", to_string(v.family)},
           {"rank", v.rank},
           {"parameter", v.parameter},
           {"has_R_infinity", v.has_R_infinity},
           {"reason", v.reason}};
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  out["singular_level"] = v.singular_level ? to_json(*v.singular_level) : Json(nullptr);
  out["report"] = v.report ? to_json(*v.report) : Json(nullptr);
  out["product_one_first_k"] = v.product_one_first_k ? Json(*v.product_one_first_k) : Json(nullptr);
  out["verified"] = v.verified;
  out["checks"] = v.checks;
  return out;
}

Json to_json(const RootCount& c) {
  return Json{{"inside", c.inside}, {"on_circle", c.on_circle}, {"outside", c.outside}};
}

Json to_json(const WitnessReport& w) {
  Json out{{"rank", w.rank},
           {"polynomial", to_json(w.polynomial)},
           {"polynomial_text", w.polynomial.to_string()},
           {"matrix", to_json(w.matrix)},
           {"det", to_json(w.det)}};
  out["dominance_ok"] = w.dominance_ok ? Json(*w.dominance_ok) : Json(nullptr);
  out["roots"] = to_json(w.roots);
  out["distinct_roots"] = w.distinct_roots;
  out["cyclotomic_free"] = w.cyclotomic_free;
  out["product_one_first_k"] = w.product_one_first_k ? Json(*w.product_one_first_k) : Json(nullptr);
  if (w.outside_root_interval)
    out["outside_root_interval"] = Json::array({to_json(w.outside_root_interval->first), to_json(w.outside_root_interval->second)});
  else
    out["outside_root_interval"] = nullptr;
  out["ok"] = w.ok;
  return out;
}

Json to_json(const NielsenStep& s) {
  switch (s.kind) {
    case NielsenStep::Kind::Transvection:
      return Json{{"kind", "transvection"}, {"target", s.target}, {"source", s.source}, {"multiplier", s.multiplier}};
    case NielsenStep::Kind::Swap:
      return Json{{"kind", "swap"}, {"target", s.target}, {"source", s.source}};
    case NielsenStep::Kind::Invert:
      return Json{{"kind", "invert"}, {"target", s.target}};
  }
  return nullptr;
}

Json to_json(const LiftCertificate& c) {
  Json steps = Json::array();
  for (const NielsenStep& s : c.steps) steps.push_back(to_json(s));
  Json images = Json::array();
  for (const Word& w : c.images) images.push_back(to_json(w));
  return Json{{"matrix", to_json(c.matrix)}, {"steps", std::move(steps)}, {"images", std::move(images)}};
}

Json to_json(const InfiniteLieElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.coords) terms.push_back(Json{{"key", key}, {"coeff", to_json(c)}});
  return Json{{"degree", x.degree}, {"terms", std::move(terms)}, {"text", x.to_string()}};
}

Json to_json(const AbelianCokerReport& r) {
  Json divisors = Json::array();
  for (const Integer& d : r.elementary_divisors) divisors.push_back(to_json(d));
  Json out{{"m", r.m},
           {"bfs_count", r.bfs_count},
           {"burnside_count", r.burnside_count},
           {"coker_prediction", r.coker_prediction},
           {"agree", r.agree},
           {"image_size", r.image_size},
           {"det_i_minus_a", to_json(r.det_i_minus_a)},
           {"elementary_divisors", std::move(divisors)},
           {"full_cokernel_visible", r.full_cokernel_visible}};
  out["reidemeister_number"] = r.reidemeister_number ? to_json(*r.reidemeister_number) : Json(nullptr);
  return out;
}

Json to_json(const Class2Report& r) {
  return Json{{"m", r.m},
              {"bfs_count", r.bfs_count},
              {"burnside_count", r.burnside_count},
              {"coker_prediction", r.coker_prediction},
              {"agree", r.agree},
              {"layers_invertible", r.layers_invertible}};
}

}  // namespace rinf::json_io
