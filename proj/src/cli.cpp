#include "rinf/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "rinf/errors.hpp"
#include "rinf/intmat.hpp"

namespace rinf::cli {

using json_io::Json;

namespace {

// Inline JSON when the argument starts with '[', otherwise a file name.
Json read_json_arg(const std::string& arg, const char* what) {
  const auto start = arg.find_first_not_of(" \t\n");
  if (start != std::string::npos && arg[start] == '[') return json_io::parse_text(arg);
  std::ifstream in(arg);
  if (!in) throw InputError(std::string("cannot read ") + what + " file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return json_io::parse_text(buf.str());
}

IntMatrix read_matrix(const std::string& arg) { return json_io::matrix_from_json(read_json_arg(arg, "matrix")); }

GroupKind parse_variant(const std::string& text) {
  if (text == "N" || text == "n") return GroupKind::FreeNilpotent;
  if (text == "M" || text == "m") return GroupKind::MetabelianNilpotent;
  throw InputError("unknown variant '" + text + "' (expected N or M)");
}

// Sets theta_cap / recursion_depth when the flags were given.
struct SchemeFlags {
  std::uint64_t theta_cap = 0;
  std::size_t recursion_depth = 0;

  void attach(CLI::App* app) {
    app->add_option("--theta-cap", theta_cap, "placements replayed before the closed form is trusted (default 100000)");
    app->add_option("--recursion-depth", recursion_depth, "depth limit for inverse images (default 10000)");
  }
  Budgets apply(Budgets b) const {
    if (theta_cap) b.theta_cap = theta_cap;
    if (recursion_depth) b.recursion_depth = recursion_depth;
    return b;
  }
};

Json error_payload(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

// Finite product of |det(I - M_i)|, the layer-product formula. Reported with
// a plumbing flag: it feeds the oracle cross-checks and is not part of the
// R_infinity criterion itself.
Json layer_product(const SpectralReport& report) {
  Integer product = 1;
  for (const LevelReport& l : report.levels) {
    if (l.det_minus_identity == 0) return Json{{"value", nullptr}, {"infinite", true}, {"plumbing", true}};
    product *= abs(l.det_minus_identity);
  }
  return Json{{"value", json_io::to_json(product)}, {"infinite", false}, {"plumbing", true}};
}

Json do_classify(const std::string& family, int rank, int param, const Budgets& budgets, int& exit_code) {
  const Family f = parse_family(family);
  const RInfinityVerdict v = classify(f, rank, param, budgets);
  Json out = json_io::to_json(v);
  out["group"] = to_string(f) + "(" + std::to_string(rank) + "," + std::to_string(param) + ")";
  if (v.witness) out["witness_lift"] = json_io::to_json(certify_onto_lift(*v.witness));
  exit_code = v.has_R_infinity ? Ok : VerdictFalse;
  return out;
}

Json do_spectrum(const std::string& matrix, const std::string& variant, int cls, const Budgets& budgets, int& exit_code) {
  const IntMatrix a = read_matrix(matrix);
  if (!a.is_square()) throw InputError("matrix must be square");
  const GroupVariant v{parse_variant(variant), static_cast<int>(a.rows()), cls};
  const RInfinityCheck check = is_R_infinite(a, v, budgets);
  Json out = json_io::to_json(check.report);
  Json singular = Json::array();
  for (const LevelReport& l : check.report.levels)
    if (l.det_minus_identity == 0) singular.push_back(l.degree);
  out["r_infinite"] = check.r_infinite;
  out["singular_degrees"] = std::move(singular);
  out["reidemeister_number"] = layer_product(check.report);
  exit_code = check.r_infinite ? Ok : VerdictFalse;
  return out;
}

Json do_witness(int rank, const Budgets& budgets, int& exit_code) {
  const WitnessReport w = verify_keyprop(rank, budgets);
  exit_code = w.ok ? Ok : VerdictFalse;
  return json_io::to_json(w);
}

Json do_product_one(const std::string& matrix, unsigned kmax, const Budgets& budgets, int& exit_code) {
  const IntMatrix a = read_matrix(matrix);
  const auto k = has_product_one(a, kmax, budgets);
  exit_code = k ? Ok : VerdictFalse;
  return Json{{"kmax", kmax}, {"first_k", k ? Json(*k) : Json("NONE")}};
}

Json do_pisot_check(const std::string& poly, int& exit_code) {
  const IntPolynomial p = json_io::polynomial_from_json(read_json_arg(poly, "polynomial"));
  if (p.degree() < 1) throw InputError("polynomial must have degree at least 1");
  Json out{{"polynomial", json_io::to_json(p)}, {"polynomial_text", p.to_string()}};
  exit_code = VerdictFalse;
  try {
    const bool dominant = dominance_check(p);
    out["dominance_ok"] = dominant;
    out["dominance_note"] = nullptr;
    if (dominant) exit_code = Ok;
  } catch (const PolynomialShapeError& e) {
    out["dominance_ok"] = nullptr;
    out["dominance_note"] = e.what();
  }
  out["roots"] = json_io::to_json(unit_disk_root_count(p));
  out["distinct_roots"] = gcd(p, p.derivative()).degree() == 0;
  const auto interval = dominant_root_interval(p);
  out["outside_root_interval"] =
      interval ? Json::array({json_io::to_json(interval->first), json_io::to_json(interval->second)}) : Json(nullptr);
  return out;
}

Json do_basis(const std::string& variant, int rank, int degree, const Budgets& budgets) {
  const GroupVariant v{parse_variant(variant), rank, degree};
  const LieRing ring(v, budgets);
  Json elements = Json::array();
  for (const BasisElement& e : ring.basis(degree)) elements.push_back(json_io::basis_to_json(e));
  const std::uint64_t formula =
      v.kind == GroupKind::FreeNilpotent ? lyndon_dimension(rank, degree) : chen_dimension(rank, degree);
  return Json{{"variant", variant == "N" || variant == "n" ? "N" : "M"},
              {"rank", rank},
              {"degree", degree},
              {"dimension", elements.size()},
              {"formula_dimension", formula},
              {"basis", std::move(elements)}};
}

Json do_solve1(const std::string& word, const Budgets& budgets, int& exit_code) {
  const Word v = json_io::parse_word_text(word);
  const auto scheme = std::make_shared<const ThetaScheme>(budgets);
  const InfiniteAutomorphism phi = InfiniteAutomorphism::phi5(scheme, budgets);
  const TwistedWitness t = solve_trivial_class(phi, v);
  const Word phi_z = phi.apply(t.z);
  const bool verified = t.z * phi_z.inverse() == v;
  exit_code = verified ? Ok : VerdictFalse;
  return Json{{"automorphism", "phi5"},
              {"word", json_io::to_json(v)},
              {"word_text", v.to_string()},
              {"z", json_io::to_json(t.z)},
              {"z_text", t.z.to_string()},
              {"phi_z", json_io::to_json(phi_z)},
              {"identity", "word = z phi(z)^-1"},
              {"verified", verified}};
}

Json do_classn(const std::string& word, unsigned n, const Budgets& budgets, int& exit_code) {
  if (n < 1) throw InputError("--n must be at least 1");
  const Word w = json_io::parse_word_text(word);
  const auto scheme = std::make_shared<const ThetaScheme>(budgets);
  const InfiniteAutomorphism phi = InfiniteAutomorphism::phi_n(n, scheme, budgets);
  const TwistedWitness t = class_of(phi, w);
  const Word rep = Word::generator(0, t.class_index);
  const Word phi_z = phi.apply(t.z);
  const bool verified = t.z * rep * phi_z.inverse() == w;
  exit_code = verified ? Ok : VerdictFalse;
  return Json{{"automorphism", "phi_n"},
              {"n", n},
              {"word", json_io::to_json(w)},
              {"word_text", w.to_string()},
              {"class_index", t.class_index},
              {"representative", json_io::to_json(rep)},
              {"z", json_io::to_json(t.z)},
              {"z_text", t.z.to_string()},
              {"phi_z", json_io::to_json(phi_z)},
              {"identity", "word = z representative phi(z)^-1"},
              {"verified", verified}};
}

Json do_theta(std::uint64_t index, const Budgets& budgets, int& exit_code) {
  const ThetaScheme scheme(budgets);
  const Word image = scheme.theta(index);
  Json out{{"index", index}, {"image", json_io::to_json(image)}, {"image_text", image.to_string()}};
  // x_0 is never placed; x_i with i >= 1 carries y_{i-1}.
  bool verified = true;
  if (index == 0) {
    verified = image.is_identity();
    out["placed"] = false;
    out["position"] = nullptr;
  } else {
    const std::uint64_t k = scheme.position(image);
    verified = scheme.placement(k) == index && scheme.theta_inverse(image) == index && scheme.word_at(k) == image;
    out["placed"] = true;
    out["position"] = k;
  }
  out["verified"] = verified;
  exit_code = verified ? Ok : VerdictFalse;
  return out;
}

Json do_oracle_abelian(const std::string& matrix, std::uint64_t m, const Budgets& budgets, int& exit_code) {
  const IntMatrix a = read_matrix(matrix);
  const AbelianCokerReport r = abelian_coker_check(a, m, budgets);
  Json out{{"model", FiniteModel::abelian(static_cast<int>(a.rows()), m, budgets).name()}};
  out.update(json_io::to_json(r));
  out["reidemeister_number_plumbing"] = true;
  exit_code = r.agree ? Ok : VerdictFalse;
  return out;
}

Json do_oracle_class2(const std::string& matrix, std::uint64_t m, const Budgets& budgets, int& exit_code) {
  const IntMatrix a = read_matrix(matrix);
  const Class2Report r = class2_check(a, m, budgets);
  Json out{{"model", FiniteModel::class2(m, budgets).name()}};
  out.update(json_io::to_json(r));
  out["coker_prediction_plumbing"] = true;
  exit_code = r.agree ? Ok : VerdictFalse;
  return out;
}

}  // namespace

Json CommandResult::to_json() const {
  Json out{{"command", command}, {"args", args}, {"exit_code", exit_code}};
  if (!help.empty()) out["help"] = help;
  else out["payload"] = payload;
  return out;
}

CommandResult run(const std::vector<std::string>& args, const Budgets& budgets) {
  CommandResult result;
  result.args = args;

  CLI::App app{"Twisted conjugacy computations for free nilpotent, metabelian and solvable groups", "rinf"};
  app.require_subcommand(1);

  std::string family, variant, matrix, poly, word;
  int rank = 0, param = 0, cls = 0, degree = 0;
  unsigned kmax = 0, n = 0;
  std::uint64_t index = 0, mod = 0;

  auto* classify_cmd = app.add_subcommand("classify", "R_infinity verdict for N(r,c), M(r,c) or S(r,k)");
  classify_cmd->add_option("--family", family, "N, M or S")->required();
  classify_cmd->add_option("--rank", rank)->required();
  classify_cmd->add_option("--param", param, "class c, or derived length k for S")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "det(M_i - I) for every level of the induced automorphism");
  spectrum_cmd->add_option("--matrix", matrix, "JSON file, or inline JSON")->required();
  spectrum_cmd->add_option("--variant", variant, "N or M")->required();
  spectrum_cmd->add_option("--class", cls)->required();

  auto* witness_cmd = app.add_subcommand("witness", "witness polynomial and matrix A_r with its checks");
  witness_cmd->add_option("--rank", rank)->required();

  auto* product_cmd = app.add_subcommand("product-one", "first k with a k-fold eigenvalue product equal to 1");
  product_cmd->add_option("--matrix", matrix)->required();
  product_cmd->add_option("--kmax", kmax)->required();

  auto* pisot_cmd = app.add_subcommand("pisot-check", "dominance inequality and exact unit-disk root counts");
  pisot_cmd->add_option("--poly", poly, "coefficients, constant term first")->required();

  auto* basis_cmd = app.add_subcommand("basis", "basis of a graded piece (1-based index tuples)");
  basis_cmd->add_option("--variant", variant, "N or M")->required();
  basis_cmd->add_option("--rank", rank)->required();
  basis_cmd->add_option("--degree", degree)->required();

  SchemeFlags solve1_flags, classn_flags, theta_flags;
  auto* infinite_cmd = app.add_subcommand("infinite", "automorphisms of the free group of countable rank");
  infinite_cmd->require_subcommand(1);
  auto* solve1_cmd = infinite_cmd->add_subcommand("solve1", "z with word = z phi(z)^-1 (R(phi) = 1)");
  solve1_cmd->add_option("--word", word)->required();
  solve1_flags.attach(solve1_cmd);
  auto* classn_cmd = infinite_cmd->add_subcommand("classn", "class index of a word under phi_n");
  classn_cmd->add_option("--word", word)->required();
  classn_cmd->add_option("--n", n)->required();
  classn_flags.attach(classn_cmd);
  auto* theta_cmd = infinite_cmd->add_subcommand("theta", "theta(x_i) and its placement");
  theta_cmd->add_option("--index", index)->required();
  theta_flags.attach(theta_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force class counts on finite models");
  oracle_cmd->require_subcommand(1);
  auto* abelian_cmd = oracle_cmd->add_subcommand("abelian", "(Z/m)^r");
  abelian_cmd->add_option("--matrix", matrix)->required();
  abelian_cmd->add_option("--mod", mod)->required();
  auto* class2_cmd = oracle_cmd->add_subcommand("class2", "rank-2 class-2 model mod m");
  class2_cmd->add_option("--matrix", matrix)->required();
  class2_cmd->add_option("--mod", mod)->required();

  std::vector<std::string> argv_storage{"rinf"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    for (const CLI::App* sub : app.get_subcommands()) {
      result.command = sub->get_name();
      for (const CLI::App* leaf : sub->get_subcommands()) result.command += " " + leaf->get_name();
    }
    if (code == 0) {
      result.help = out.str();
      result.exit_code = Ok;
    } else {
      result.payload = error_payload("usage", e.what());
      result.exit_code = BadInput;
    }
    return result;
  }

  int exit_code = Ok;
  try {
    if (classify_cmd->parsed()) {
      result.command = "classify";
      result.payload = do_classify(family, rank, param, budgets, exit_code);
    } else if (spectrum_cmd->parsed()) {
      result.command = "spectrum";
      result.payload = do_spectrum(matrix, variant, cls, budgets, exit_code);
    } else if (witness_cmd->parsed()) {
      result.command = "witness";
      result.payload = do_witness(rank, budgets, exit_code);
    } else if (product_cmd->parsed()) {
      result.command = "product-one";
      result.payload = do_product_one(matrix, kmax, budgets, exit_code);
    } else if (pisot_cmd->parsed()) {
      result.command = "pisot-check";
      result.payload = do_pisot_check(poly, exit_code);
    } else if (basis_cmd->parsed()) {
      result.command = "basis";
      result.payload = do_basis(variant, rank, degree, budgets);
    } else if (solve1_cmd->parsed()) {
      result.command = "infinite solve1";
      result.payload = do_solve1(word, solve1_flags.apply(budgets), exit_code);
    } else if (classn_cmd->parsed()) {
      result.command = "infinite classn";
      result.payload = do_classn(word, n, classn_flags.apply(budgets), exit_code);
    } else if (theta_cmd->parsed()) {
      result.command = "infinite theta";
      result.payload = do_theta(index, theta_flags.apply(budgets), exit_code);
    } else if (abelian_cmd->parsed()) {
      result.command = "oracle abelian";
      result.payload = do_oracle_abelian(matrix, mod, budgets, exit_code);
    } else if (class2_cmd->parsed()) {
      result.command = "oracle class2";
      result.payload = do_oracle_class2(matrix, mod, budgets, exit_code);
    }
    result.exit_code = exit_code;
  } catch (const BudgetExceeded& e) {
    result.payload = error_payload("budget", e.what());
    result.payload["error"]["budget"] = e.budget();
    result.payload["error"]["required"] = e.required();
    result.payload["error"]["limit"] = e.limit();
    result.exit_code = OverBudget;
  } catch (const VerificationFailure& e) {
    result.payload = error_payload("verification", e.what());
    result.exit_code = VerdictFalse;
  } catch (const std::invalid_argument& e) {  // InputError and its subclasses
    result.payload = error_payload("input", e.what());
    result.exit_code = BadInput;
  } catch (const Json::exception& e) {
    result.payload = error_payload("input", e.what());
    result.exit_code = BadInput;
  } catch (const std::out_of_range& e) {  // UndefinedGenerator
    result.payload = error_payload("input", e.what());
    result.exit_code = BadInput;
  }
  return result;
}

}  // namespace rinf::cli
