#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rinf/cli.hpp"
#include "rinf/errors.hpp"
#include "rinf/infinite.hpp"
#include "rinf/pisot.hpp"
#include "rinf/reidemeister.hpp"

namespace py = pybind11;
using namespace rinf;

namespace {

py::object to_py(const Integer& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& h) { return parse_integer(py::str(h).cast<std::string>()); }

IntMatrix matrix_from_py(const std::vector<std::vector<py::object>>& rows) {
  std::vector<std::vector<Integer>> out;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (const auto& e : row) r.push_back(from_py(e));
    out.push_back(std::move(r));
  }
  return IntMatrix::from_rows(out);
}

GroupVariant variant_from(const std::string& letter, int rank, int cls) {
  if (letter == "N") return {GroupKind::FreeNilpotent, rank, cls};
  if (letter == "M") return {GroupKind::MetabelianNilpotent, rank, cls};
  throw InputError("variant must be N or M");
}

}  // namespace

PYBIND11_MODULE(_rinf, m) {
  m.doc() = "bindings for the rinf core";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    const cli::CommandResult r = cli::run(args);
    return py::make_tuple(r.exit_code, r.help.empty() ? r.to_json().dump() : r.help);
  }, "Runs a CLI command in-process; returns (exit_code, json_text).");

  m.def("witness_poly", [](int r) {
    const IntPolynomial p = witness_poly(r);
    py::list out;
    for (const Integer& c : p.coefficients()) out.append(to_py(c));
    return out;
  }, "Coefficients of the witness polynomial, constant term first.");

  m.def("unit_disk_root_count", [](const std::vector<py::object>& coeffs) {
    std::vector<Integer> cs;
    for (const auto& c : coeffs) cs.push_back(from_py(c));
    const RootCount c = unit_disk_root_count(IntPolynomial(std::move(cs)));
    return py::make_tuple(c.inside, c.on_circle, c.outside);
  });

  m.def("is_R_infinite", [](const std::vector<std::vector<py::object>>& a, const std::string& variant, int cls) {
    const IntMatrix mat = matrix_from_py(a);
    return is_R_infinite(mat, variant_from(variant, static_cast<int>(mat.rows()), cls)).r_infinite;
  });

  m.def("reidemeister_number", [](const std::vector<std::vector<py::object>>& a, const std::string& variant, int cls) -> py::object {
    const IntMatrix mat = matrix_from_py(a);
    const auto n = reidemeister_number(mat, variant_from(variant, static_cast<int>(mat.rows()), cls));
    return n ? to_py(*n) : py::none();
  }, "Layer product of |det(I - M_i)|, or None when infinite.");

  m.def("class_of", [](const std::string& word, unsigned n) {
    const auto phi = InfiniteAutomorphism::phi_n(n, std::make_shared<const ThetaScheme>());
    const TwistedWitness t = class_of(phi, Word::parse(word));
    return py::make_tuple(t.class_index, t.z.to_string(), t.verified);
  });
}
