#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <sstream>

#include "affine321/affine321.hpp"

namespace py = pybind11;
using namespace affine321;

namespace {

std::vector<Int> to_vector(std::span<const Int> s) { return {s.begin(), s.end()}; }

py::object triple_or_none(const std::optional<Triple>& t) {
  if (!t) return py::none();
  return py::make_tuple(t->a, t->b, t->c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Affine permutations of type A: 321-avoidance, full commutativity and cells.";

  auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<RankMismatch>(m, "RankMismatch", invalid.ptr());
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<AffinePermutation>(m, "AffinePermutation")
      .def(py::init(&AffinePermutation::from_window), py::arg("window"))
      .def_static("identity", &AffinePermutation::identity, py::arg("n"))
      .def_static("generator", &AffinePermutation::generator, py::arg("n"), py::arg("i"))
      .def_static("parse", [](const std::string& text) { return parse_window(text); })
      .def_property_readonly("rank", &AffinePermutation::rank)
      .def_property_readonly("window", [](const AffinePermutation& w) { return to_vector(w.window()); })
      .def("__call__", &AffinePermutation::operator(), py::arg("t"))
      .def("__mul__", [](const AffinePermutation& u, const AffinePermutation& v) { return compose(u, v); })
      .def("inverse", [](const AffinePermutation& w) { return inverse(w); })
      .def("length", [](const AffinePermutation& w) { return length(w); })
      .def("reduced_word", [](const AffinePermutation& w) {
        auto word = canonical_reduced_word(w);
        return std::vector<int>(word.letters().begin(), word.letters().end());
      })
      .def("is_right_descent", [](const AffinePermutation& w, int i) { return is_right_descent(w, i); })
      .def("is_left_descent", [](const AffinePermutation& w, int i) { return is_left_descent(w, i); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const AffinePermutation& w) { return std::hash<AffinePermutation>{}(w); })
      .def("__str__", [](const AffinePermutation& w) { return format_window(w); })
      .def("__repr__", [](const AffinePermutation& w) {
        return "AffinePermutation(" + format_window(w) + ")";
      });

  py::class_<ExtendedAffinePermutation>(m, "ExtendedAffinePermutation")
      .def(py::init(&ExtendedAffinePermutation::from_window), py::arg("window"))
      .def(py::init<Int, AffinePermutation>(), py::arg("shift"), py::arg("body"))
      .def_static("rho", &ExtendedAffinePermutation::rho, py::arg("n"))
      .def_property_readonly("rank", &ExtendedAffinePermutation::rank)
      .def_property_readonly("shift", &ExtendedAffinePermutation::shift)
      .def_property_readonly("body", &ExtendedAffinePermutation::body)
      .def_property_readonly("window", &ExtendedAffinePermutation::window)
      .def("__call__", &ExtendedAffinePermutation::operator(), py::arg("t"))
      .def("__mul__", [](const ExtendedAffinePermutation& u, const ExtendedAffinePermutation& v) {
        return compose(u, v);
      })
      .def("__pow__", [](const ExtendedAffinePermutation& w, int e) { return power(w, e); })
      .def("inverse", [](const ExtendedAffinePermutation& w) { return inverse(w); })
      .def("length", [](const ExtendedAffinePermutation& w) { return length(w); })
      .def("is_fully_commutative", &is_fc_extended)
      .def("is_321_avoiding", &is_321_direct)
      .def(py::self == py::self)
      .def("__repr__", [](const ExtendedAffinePermutation& w) { return format_extended(w); });

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<int>>(), py::arg("parts"))
      .def_property_readonly("parts", &Partition::parts)
      .def_property_readonly("size", &Partition::size)
      .def("dominates", [](const Partition& a, const Partition& b) { return dominates(a, b); })
      .def(py::self == py::self)
      .def("__hash__", [](const Partition& p) {
        return py::hash(py::tuple(py::cast(p.parts())));
      })
      .def("__repr__", [](const Partition& p) { return "Partition" + format_partition(p); });

  py::class_<Root>(m, "Root")
      .def(py::init<std::vector<Int>>(), py::arg("coeffs"))
      .def_static("simple", &Root::simple, py::arg("n"), py::arg("i"))
      .def_static("delta", &Root::delta, py::arg("n"))
      .def_property_readonly("coeffs", [](const Root& r) { return to_vector(r.coeffs()); })
      .def("is_positive", &Root::is_positive)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Root& r) { return "Root" + format_root(r); });

  m.def("from_word", [](int n, std::vector<int> letters) {
    return evaluate_word(CoxeterWord(n, std::move(letters)));
  }, py::arg("n"), py::arg("letters"));
  m.def("is_reduced", [](int n, std::vector<int> letters) {
    return is_reduced(CoxeterWord(n, std::move(letters)));
  }, py::arg("n"), py::arg("letters"));
  m.def("commutation_class", [](int n, std::vector<int> letters) {
    std::vector<std::vector<int>> out;
    for (const auto& w : commutation_class(CoxeterWord(n, std::move(letters)))) {
      out.emplace_back(w.letters().begin(), w.letters().end());
    }
    return out;
  }, py::arg("n"), py::arg("letters"));

  m.def("is_fully_commutative", [](const AffinePermutation& w) { return is_fully_commutative_word(w); });
  m.def("is_321_avoiding", [](const AffinePermutation& w) { return is_321_avoiding(w); });
  m.def("find_321", [](const AffinePermutation& w) { return triple_or_none(find_321_instance(w)); });
  m.def("condition_ii_holds", &condition_ii_holds);
  m.def("condition_iv_holds", &condition_iv_holds);
  m.def("inversion_set", [](const AffinePermutation& w) { return inversion_set(w); });

  m.def("chain_cover_sizes", &chain_cover_sizes);
  m.def("d_k", &d_k, py::arg("w"), py::arg("k"));
  m.def("sigma", &sigma);
  m.def("same_two_sided_cell", &same_two_sided_cell);
  m.def("leq_lr", &leq_lr);
  m.def("fc_cell_representatives", &fc_cell_representatives, py::arg("n"));
  m.def("fc_cell_count", &fc_cell_count, py::arg("n"));

  m.def("enumerate_ball", [](int n, int radius, std::size_t budget) {
    return enumerate_ball(n, radius, budget).by_length;
  }, py::arg("n"), py::arg("radius"), py::arg("budget") = kDefaultBallBudget,
     "Elements of length <= radius, grouped by length.");
}
