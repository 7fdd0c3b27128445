#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpsw/analysis.hpp"
#include "gpsw/closure.hpp"
#include "gpsw/error.hpp"
#include "gpsw/gps.hpp"
#include "gpsw/report_json.hpp"
#include "gpsw/thue_morse.hpp"
#include "gpsw/verifier.hpp"

namespace py = pybind11;
using namespace gpsw;

namespace {

// Words cross the boundary as their text form or as lists of ints.
Word to_word(const py::object& obj, std::uint32_t m) {
  if (py::isinstance<py::str>(obj)) return parse_word(obj.cast<std::string>(), m);
  std::vector<Letter> letters;
  for (auto item : obj) {
    const auto v = item.cast<std::uint64_t>();
    if (v >= m) throw AlphabetError("letter " + std::to_string(v) + " is not in Z_" + std::to_string(m));
    letters.push_back(static_cast<Letter>(v));
  }
  return Word(m, std::move(letters));
}

py::object json_to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pseudopalindromic closures and generalized Thue-Morse words";

  static py::exception<Error> base_error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });

  py::class_<DihedralElement>(m, "DihedralElement")
      .def_property_readonly("is_antimorphism", &DihedralElement::is_antimorphism)
      .def_property_readonly("parameter", &DihedralElement::parameter)
      .def_property_readonly("modulus", &DihedralElement::modulus)
      .def("__call__", [](const DihedralElement& g, const py::object& w) {
        return format_word(g(to_word(w, g.modulus())));
      })
      .def("__eq__", [](const DihedralElement& a, const DihedralElement& b) { return a == b; })
      .def("__hash__", [](const DihedralElement& g) { return py::hash(py::make_tuple(g.is_antimorphism(), g.parameter(), g.modulus())); })
      .def("__repr__", &DihedralElement::to_string);

  m.def("psi", &psi, py::arg("x"), py::arg("m"));
  m.def("shift", &DihedralElement::shift, py::arg("t"), py::arg("m"));
  m.def("parse_antimorphism", &parse_antimorphism, py::arg("text"), py::arg("m"));
  m.def("compose", &compose);
  m.def("dihedral_group", [](std::uint32_t mod) { return dihedral_group(mod).elements; }, py::arg("m"));
  m.def("conjugate_through_phi", &conjugate_through_phi, py::arg("g"), py::arg("b"));

  m.def("parse_word", [](const std::string& text, std::uint32_t mod) {
    const Word w = parse_word(text, mod);
    return std::vector<Letter>(w.begin(), w.end());
  }, py::arg("text"), py::arg("m"));
  m.def("jumps", [](const py::object& w, std::uint32_t mod) { return jumps(to_word(w, mod)); },
        py::arg("word"), py::arg("m"));
  m.def("is_fixed", [](const DihedralElement& g, const py::object& w) { return is_fixed(g, to_word(w, g.modulus())); },
        py::arg("g"), py::arg("word"));
  m.def("longest_pal_suffix",
        [](const py::object& w, const DihedralElement& g) { return longest_pal_suffix(to_word(w, g.modulus()), g); },
        py::arg("word"), py::arg("g"));
  m.def("closure", [](const py::object& w, const DihedralElement& g) {
    return format_word(closure(to_word(w, g.modulus()), g));
  }, py::arg("word"), py::arg("g"));

  m.def("gps_prefix", [](const std::string& spec, std::uint32_t mod, std::size_t length) {
    return format_word(gps_prefix(parse_bisequence(spec, mod), length));
  }, py::arg("bisequence"), py::arg("m"), py::arg("length"));
  m.def("gps_steps", [](const std::string& spec, std::uint32_t mod, std::size_t steps) {
    std::vector<std::string> words;
    for (const auto& s : gps_steps(parse_bisequence(spec, mod), steps).steps) words.push_back(format_word(s.word));
    return words;
  }, py::arg("bisequence"), py::arg("m"), py::arg("steps"));
  m.def("pseudopalindromic_prefixes", [](const py::object& w, std::uint32_t mod) {
    std::vector<std::pair<std::size_t, DihedralElement>> out;
    for (const auto& e : pseudopalindromic_prefixes(to_word(w, mod))) out.emplace_back(e.length, e.antimorphism);
    return out;
  }, py::arg("word"), py::arg("m"));
  m.def("infer_bisequence", [](const py::object& w, std::uint32_t mod, std::size_t max_chains) {
    return json_to_python(to_json(infer_bisequence(to_word(w, mod), max_chains)));
  }, py::arg("word"), py::arg("m"), py::arg("max_chains") = 4096);
  m.def("canonical_directives", [](std::uint32_t b, std::uint32_t mod) {
    return canonical_directives(TbmParams(b, mod)).to_string();
  }, py::arg("b"), py::arg("m"));

  m.def("digit_sum", &digit_sum, py::arg("n"), py::arg("b"));
  m.def("tbm_prefix", [](std::uint32_t b, std::uint32_t mod, std::size_t length) {
    return format_word(tbm_prefix(TbmParams(b, mod), length));
  }, py::arg("b"), py::arg("m"), py::arg("length"));
  m.def("phi_fixed_point_prefix", [](std::uint32_t b, std::uint32_t mod, std::size_t length) {
    return format_word(phi_fixed_point_prefix(TbmParams(b, mod), length));
  }, py::arg("b"), py::arg("m"), py::arg("length"));
  m.def("phi_apply", [](std::uint32_t b, std::uint32_t mod, const py::object& w) {
    return format_word(phi_apply(TbmParams(b, mod), to_word(w, mod)));
  }, py::arg("b"), py::arg("m"), py::arg("word"));
  m.def("order_q", [](std::uint32_t b, std::uint32_t mod) { return order_q(TbmParams(b, mod)); }, py::arg("b"), py::arg("m"));
  m.def("is_periodic", [](std::uint32_t b, std::uint32_t mod) { return is_periodic(TbmParams(b, mod)); }, py::arg("b"), py::arg("m"));
  m.def("ancestors", [](const py::object& v, std::uint32_t b, std::uint32_t mod) {
    std::vector<std::string> out;
    for (const auto& w : ancestors(to_word(v, mod), TbmParams(b, mod))) out.push_back(format_word(w));
    return out;
  }, py::arg("factor"), py::arg("b"), py::arg("m"));

  m.def("factor_complexity", [](const py::object& w, std::uint32_t mod, std::size_t n_max) {
    return factor_complexity(to_word(w, mod), n_max).values;
  }, py::arg("word"), py::arg("m"), py::arg("n_max"));
  m.def("palindrome_census", [](const py::object& w, std::uint32_t mod) {
    return json_to_python(to_json(palindrome_census(to_word(w, mod))));
  }, py::arg("word"), py::arg("m"));
  m.def("find_overlap", [](const py::object& w, std::uint32_t mod) {
    return json_to_python(to_json(find_overlap(to_word(w, mod))));
  }, py::arg("word"), py::arg("m"));

  m.def("verify_theorem", [](std::uint32_t b, std::uint32_t mod, std::size_t length) {
    return json_to_python(to_json(verify_theorem(TbmParams(b, mod), length)));
  }, py::arg("b"), py::arg("m"), py::arg("length") = 4096);
  m.def("verify_lemma_suite", [](std::uint32_t b, std::uint32_t mod, unsigned n_max) {
    return json_to_python(to_json(verify_lemma_suite(TbmParams(b, mod), n_max)));
  }, py::arg("b"), py::arg("m"), py::arg("n_max") = 4);
  m.def("verify_properties", [](std::uint32_t b, std::uint32_t mod, std::size_t prefix_len) {
    return json_to_python(to_json(verify_properties(TbmParams(b, mod), prefix_len)));
  }, py::arg("b"), py::arg("m"), py::arg("prefix_len") = 2000);
  m.def("theorem_grid", [](std::uint32_t b_max, std::uint32_t m_max, std::size_t length) {
    py::gil_scoped_release release;
    auto grid = theorem_grid(2, b_max, 2, m_max, length);
    py::gil_scoped_acquire acquire;
    py::dict out;
    out["iff_pattern_holds"] = grid.iff_pattern_holds;
    out["cells"] = json_to_python(to_json(grid.cells));
    return out;
  }, py::arg("b_max"), py::arg("m_max"), py::arg("length") = 4096);
}
