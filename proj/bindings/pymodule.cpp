// Python bindings over the main operations.  Exact big values cross the
// boundary as strings; words are 0/1 strings such as "110100".

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dexter/binary_tree.hpp"
#include "dexter/hochschild.hpp"
#include "dexter/invariants.hpp"
#include "dexter/meet.hpp"
#include "dexter/monoid.hpp"
#include "dexter/order.hpp"
#include "dexter/tamari.hpp"

namespace py = pybind11;
using dexter::DyckPath;

namespace {

std::vector<std::string> as_strings(const std::vector<DyckPath>& paths) {
  std::vector<std::string> out;
  out.reserve(paths.size());
  for (const DyckPath& w : paths) out.push_back(w.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(dexterpath, m) {
  m.doc() = "Exact combinatorics of the dexter order on Dyck paths";

  py::register_exception<dexter::error>(m, "DexterError", PyExc_ValueError);

  m.def(
      "validate",
      [](const std::string& word) { return DyckPath::parse(word).str(); },
      py::arg("word"), "Parses a 0/1 word and checks the path invariants.");
  m.def(
      "blocks",
      [](const std::string& word) {
        return as_strings(dexter::blocks(DyckPath::parse(word)));
      },
      py::arg("word"), "Splits at every return to height zero.");
  m.def(
      "area",
      [](const std::string& word) {
        return dexter::area(DyckPath::parse(word));
      },
      py::arg("word"));
  m.def(
      "height_sequence",
      [](const std::string& word) {
        return dexter::height_sequence(DyckPath::parse(word));
      },
      py::arg("word"));
  m.def(
      "min_path", [](int n) { return dexter::min_path(n).str(); },
      py::arg("n"));
  m.def(
      "all_paths", [](int n) { return as_strings(dexter::all_paths(n)); },
      py::arg("n"));
  m.def(
      "covers",
      [](const std::string& word) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const dexter::Cover& c : dexter::covers(DyckPath::parse(word)))
          out.emplace_back(c.target.str(),
                           std::string(dexter::color_name(c.color)));
        return out;
      },
      py::arg("word"), "Upper covers with their red/blue colors.");
  m.def(
      "is_maximal",
      [](const std::string& word) {
        return dexter::is_maximal(DyckPath::parse(word));
      },
      py::arg("word"));
  m.def(
      "leq",
      [](const std::string& u, const std::string& v) {
        DyckPath a = DyckPath::parse(u);
        return dexter::shared_poset(a.size()).leq(a, DyckPath::parse(v));
      },
      py::arg("u"), py::arg("v"), "Comparison in the dexter order.");
  m.def(
      "meet",
      [](const std::string& u, const std::string& v) {
        return dexter::meet(DyckPath::parse(u), DyckPath::parse(v)).str();
      },
      py::arg("u"), py::arg("v"));
  m.def(
      "tamari_covers",
      [](const std::string& word) {
        return as_strings(dexter::tamari_covers(DyckPath::parse(word)));
      },
      py::arg("word"));
  m.def(
      "comb_covers",
      [](const std::string& word) {
        return as_strings(dexter::comb_covers(DyckPath::parse(word)));
      },
      py::arg("word"));
  m.def(
      "sharp",
      [](const std::string& u, const std::string& v) {
        return dexter::sharp(DyckPath::parse(u), DyckPath::parse(v)).str();
      },
      py::arg("u"), py::arg("v"), "The monoid product on non-empty paths.");
  m.def(
      "sharp_factor",
      [](const std::string& word) {
        return as_strings(dexter::sharp_factor(DyckPath::parse(word)));
      },
      py::arg("word"), "Unique factorization into monoid generators.");
  m.def(
      "interval_count",
      [](int n) {
        return static_cast<long long>(dexter::all_intervals(n).size());
      },
      py::arg("n"), "Number of intervals, by enumeration.");
  m.def(
      "interval_count_formula",
      [](int n) { return dexter::interval_count_formula(n).str(); },
      py::arg("n"), "The closed formula, as a decimal string.");
  m.def(
      "interval_series",
      [](const std::string& kind, int degree) {
        dexter::IntervalKind k = kind == "R" ? dexter::IntervalKind::reduced
                                 : kind == "C" ? dexter::IntervalKind::core
                                               : dexter::IntervalKind::all;
        return dexter::interval_series(k, degree).to_poly().str();
      },
      py::arg("kind"), py::arg("degree"));
  m.def(
      "rho",
      [](const std::string& word) {
        return dexter::encode_vertex(DyckPath::parse(word)).str();
      },
      py::arg("word"), "Ternary vertex encoding of the Hochschild interval.");
  m.def(
      "rho_inv",
      [](const std::string& digits) {
        return dexter::decode_vertex(dexter::TernaryWord::parse(digits))
            .str();
      },
      py::arg("digits"));
  m.def(
      "hochschild_elements",
      [](int n) { return as_strings(dexter::hochschild_elements(n)); },
      py::arg("n"));
  m.def(
      "vertex_sets",
      [](int n) {
        dexter::VertexSets sets = dexter::vertex_sets(n);
        auto strings = [](const std::vector<dexter::TernaryWord>& words) {
          std::vector<std::string> out;
          for (const auto& z : words) out.push_back(z.str());
          return out;
        };
        py::dict out;
        out["zero"] = strings(sets.zero);
        out["one"] = strings(sets.one);
        out["plain"] = strings(sets.plain);
        return out;
      },
      py::arg("n"));
  m.def(
      "to_tree",
      [](const std::string& word) {
        return dexter::to_binary_tree(DyckPath::parse(word)).str();
      },
      py::arg("word"), "Parenthesized image under the tree bijection.");
  m.def(
      "coxeter",
      [](const std::string& top) {
        dexter::IntPoly c = dexter::coxeter_polynomial(
            dexter::lower_interval(DyckPath::parse(top)));
        return dexter::cyclotomic_factor(c).str();
      },
      py::arg("top"),
      "Factored Coxeter polynomial of the interval below a path.");
  m.def(
      "zeta_eval",
      [](int n, long long k) {
        return dexter::zeta_polynomial(dexter::shared_poset(n).poset())
            .eval(dexter::BigRat(k))
            .str();
      },
      py::arg("n"), py::arg("k"),
      "Zeta polynomial of the size-n diagram evaluated at an integer.");
  m.def(
      "colored_h_polynomial",
      [](int n) { return dexter::colored_h_polynomial(n).str(); },
      py::arg("n"));
  m.def(
      "hasse_json",
      [](int n, const std::string& order) {
        if (order == "tamari") return dexter::tamari_hasse(n).json(order);
        if (order == "comb") return dexter::comb_hasse(n).json(order);
        return dexter::hasse(n).poset().json(order);
      },
      py::arg("n"), py::arg("order") = "dexter");
}
