#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "compmat/classes.hpp"
#include "compmat/degree.hpp"
#include "compmat/document.hpp"
#include "compmat/errors.hpp"
#include "compmat/lcp.hpp"
#include "compmat/linalg.hpp"

namespace py = pybind11;
using namespace compmat;

// Rational <-> fractions.Fraction. Accepts int, Fraction and rational strings.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    try {
      if (py::isinstance<py::str>(src)) {
        value = Rational::parse(src.cast<std::string>());
        return true;
      }
      if (PyBool_Check(src.ptr())) return false;
      if (py::isinstance<py::int_>(src)) {
        value = Rational::parse(py::str(src).cast<std::string>());
        return true;
      }
      const auto fraction = py::module_::import("fractions").attr("Fraction");
      if (py::isinstance(src, fraction)) {
        value = Rational::parse(py::str(src).cast<std::string>());
        return true;
      }
    } catch (const std::invalid_argument&) {
      return false;
    }
    return false;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(r.str()).release();
  }
};
}  // namespace pybind11::detail

namespace {

Matrix to_matrix(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DimensionMismatch("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

py::list from_matrix(const Matrix& a) {
  py::list rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < a.cols(); ++j) row.append(py::cast(a(i, j)));
    rows.append(row);
  }
  return rows;
}

std::vector<std::size_t> from_set(const IndexSet& s) { return {s.begin(), s.end()}; }

IndexSet to_set(std::size_t n, const std::vector<std::size_t>& indices) { return IndexSet(n, indices); }

py::dict verdict_dict(const ClassVerdict& v) {
  py::dict d;
  d["class"] = to_string(v.matrix_class);
  d["member"] = v.member;
  d["witness_vector"] = v.witness_vector ? py::cast(*v.witness_vector) : py::none();
  d["witness_set"] = v.witness_set ? py::cast(from_set(*v.witness_set)) : py::none();
  d["note"] = v.certificate_note;
  return d;
}

py::dict solution_dict(const Solution& s) {
  py::dict d;
  d["w"] = s.w;
  d["z"] = s.z;
  return d;
}

py::dict piece_dict(const SolutionPiece& p) {
  py::dict d;
  d["support"] = from_set(p.support);
  d["particular"] = solution_dict(p.particular);
  d["relative_interior"] = solution_dict(p.relative_interior);
  d["ray_basis"] = p.ray_basis;
  d["w_constant"] = p.w_constant;
  return d;
}

Solution to_solution(const LCPInstance& inst, const Vector& z) { return solution_from_z(inst, z); }

}  // namespace

PYBIND11_MODULE(compmat, m) {
  m.doc() = "Exact matrix classes, LCP solutions and local degree over the rationals.\n"
            "Entries are fractions.Fraction (ints and strings like \"3/4\" are accepted).\n"
            "Index sets are 0-based lists.";

  auto base = py::register_exception<Error>(m, "CompmatError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<SingularPivot>(m, "SingularPivot", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<DegenerateQ>(m, "DegenerateQ", base.ptr());
  py::register_exception<InvalidSolution>(m, "InvalidSolution", base.ptr());
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", base.ptr());

  m.def(
      "parse",
      [](const std::string& text) {
        const auto doc = parse_document(text);
        py::dict d;
        d["n"] = doc.n;
        d["A"] = from_matrix(doc.A);
        d["q"] = doc.q ? py::cast(*doc.q) : py::none();
        return d;
      },
      py::arg("text"), "Parse a JSON or text matrix document.");

  m.def(
      "classify",
      [](const std::vector<std::vector<Rational>>& a) {
        py::list out;
        for (const auto& v : classify(to_matrix(a)).verdicts) out.append(verdict_dict(v));
        return out;
      },
      py::arg("A"), "Every class verdict, with witnesses on non-membership.");

  m.def(
      "is_column_competent", [](const std::vector<std::vector<Rational>>& a) {
        return verdict_dict(is_column_competent(to_matrix(a)));
      },
      py::arg("A"));

  m.def(
      "is_column_adequate",
      [](const std::vector<std::vector<Rational>>& a, const std::string& mode) {
        AdequacyMode md = AdequacyMode::Checked;
        if (mode == "theorem") md = AdequacyMode::Theorem;
        else if (mode == "direct") md = AdequacyMode::Direct;
        else if (mode != "checked") throw std::invalid_argument("mode must be theorem, direct or checked");
        return verdict_dict(is_column_adequate(to_matrix(a), md));
      },
      py::arg("A"), py::arg("mode") = "checked");

  m.def(
      "null_space", [](const std::vector<std::vector<Rational>>& a) { return null_space_basis(to_matrix(a)); },
      py::arg("A"));

  m.def(
      "ppt",
      [](const std::vector<std::vector<Rational>>& a, const std::vector<std::size_t>& alpha) {
        const Matrix ma = to_matrix(a);
        const auto r = ppt(ma, to_set(ma.rows(), alpha));
        py::dict d;
        d["transformed"] = from_matrix(r.transformed);
        d["pivot_det_sign"] = r.pivot_det_sign;
        return d;
      },
      py::arg("A"), py::arg("alpha"));

  m.def(
      "lemke",
      [](const std::vector<std::vector<Rational>>& a, const Vector& q) {
        const auto r = lemke_solve(LCPInstance(to_matrix(a), q));
        py::dict d;
        d["status"] = r.status == LemkeResult::Status::Solved ? "solved" : "ray_termination";
        d["solution"] = r.solution ? py::object(solution_dict(*r.solution)) : py::none();
        d["pivots"] = r.pivots;
        return d;
      },
      py::arg("A"), py::arg("q"));

  m.def(
      "enumerate",
      [](const std::vector<std::vector<Rational>>& a, const Vector& q) {
        py::list out;
        for (const auto& p : enumerate_solutions(LCPInstance(to_matrix(a), q))) out.append(piece_dict(p));
        return out;
      },
      py::arg("A"), py::arg("q"), "Every maximal solution piece.");

  m.def(
      "w_solutions",
      [](const std::vector<std::vector<Rational>>& a, const Vector& q) {
        const auto w = w_solution_set(LCPInstance(to_matrix(a), q));
        py::dict d;
        d["finite"] = w.finite;
        d["w_values"] = w.w_values;
        d["infinite_witness"] = w.infinite_witness ? py::object(piece_dict(*w.infinite_witness)) : py::none();
        return d;
      },
      py::arg("A"), py::arg("q"));

  m.def(
      "degree",
      [](const std::vector<std::vector<Rational>>& a, const Vector& q) {
        const auto r = local_degree(to_matrix(a), q);
        py::list contributions;
        for (const auto& c : r.contributions) {
          py::dict e;
          e["support"] = from_set(c.support);
          e["index"] = c.index;
          contributions.append(e);
        }
        py::dict d;
        d["value"] = r.value;
        d["contributions"] = contributions;
        return d;
      },
      py::arg("A"), py::arg("q"), "Local degree at a non-degenerate q; raises DegenerateQ otherwise.");

  m.def(
      "wcheck",
      [](const std::vector<std::vector<Rational>>& a, const Vector& q, const Vector& z) {
        const LCPInstance inst(to_matrix(a), q);
        const Solution sol = to_solution(inst, z);
        const auto v = check_local_w_uniqueness(inst, sol);
        const auto c = check_w_uniqueness_converse(inst, sol);
        py::dict d;
        d["alpha"] = from_set(v.alpha);
        d["beta"] = from_set(v.beta);
        d["certificate_holds"] = v.certificate_holds;
        if (v.violating_pair) {
          py::dict p;
          p["w_alpha"] = v.violating_pair->w_alpha;
          p["z_beta"] = v.violating_pair->z_beta;
          d["violating_pair"] = p;
        } else {
          d["violating_pair"] = py::none();
        }
        d["converse_trivial_kernel"] = c.trivial_kernel;
        d["converse_witness"] = c.witness ? py::cast(*c.witness) : py::none();
        return d;
      },
      py::arg("A"), py::arg("q"), py::arg("z"), "Local w-uniqueness test at the solution with this z.");
}
