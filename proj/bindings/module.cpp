// Python bindings. Structured results (classification reports, audit
// reports, enumeration tables) are produced by the JSON serializers and
// handed to Python as plain dicts/lists so the schema matches the CLI
// byte for byte.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "bsdh/beta_matrix.hpp"
#include "bsdh/errors.hpp"
#include "bsdh/fano.hpp"
#include "bsdh/report.hpp"
#include "bsdh/root_system.hpp"
#include "bsdh/weyl.hpp"

namespace py = pybind11;

namespace {

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

bsdh::Word make_word(const std::string& type, const std::string& word) {
  return bsdh::parse_word(bsdh::parse_simple_type(type), word);
}

std::vector<std::vector<int>> matrix_rows(const bsdh::BetaMatrix& m) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(m.size()));
  for (int i = 1; i <= m.size(); ++i) {
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(m.size()));
    for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Fano/weak-Fano classification of iterated projective-line bundles "
      "attached to words in Weyl groups";
  m.attr("__version__") = "0.1.0";

  // Later registrations are matched first, so the specific exception
  // types must come after the base class.
  py::register_exception<bsdh::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<bsdh::CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<bsdh::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<bsdh::NotReducedError>(m, "NotReducedError", PyExc_ValueError);

  m.def(
      "classify",
      [](const std::string& type, const std::string& word) {
        return json_loads(bsdh::report_to_json(bsdh::classify(make_word(type, word))));
      },
      py::arg("type"), py::arg("word"),
      "Classify the variety of a reduced word; returns the report as a dict.");

  m.def(
      "classify_matrix",
      [](const std::string& matrix) {
        return json_loads(
            bsdh::report_to_json(bsdh::classify_matrix(bsdh::parse_matrix(matrix))));
      },
      py::arg("matrix"),
      "Classify a raw upper-triangular pairing matrix; returns the report as a dict.");

  m.def(
      "audit",
      [](const std::string& type, int max_len, int jobs) {
        return json_loads(bsdh::audit_to_json(
            bsdh::audit(bsdh::parse_simple_type(type), max_len, jobs)));
      },
      py::arg("type"), py::arg("max_len"), py::arg("jobs") = 1,
      "Cross-check both classifier paths over every reduced word up to max_len.");

  m.def(
      "enumerate_classified",
      [](const std::string& type, int max_len) {
        return json_loads(
            bsdh::enumeration_to_json(bsdh::enumerate_classified(
                bsdh::parse_simple_type(type), max_len)));
      },
      py::arg("type"), py::arg("max_len"),
      "Classify every reduced word up to max_len; returns a list of row dicts.");

  m.def(
      "cartan_matrix",
      [](const std::string& type) {
        bsdh::SimpleType t = bsdh::parse_simple_type(type);
        bsdh::CartanMatrix cm = bsdh::cartan_matrix(t);
        std::vector<std::vector<int>> rows;
        for (int i = 1; i <= t.rank; ++i) {
          std::vector<int> row;
          for (int j = 1; j <= t.rank; ++j) row.push_back(cm.at(i, j));
          rows.push_back(std::move(row));
        }
        return rows;
      },
      py::arg("type"), "Generalized Cartan matrix of a simple type, as nested lists.");

  m.def(
      "beta_matrix",
      [](const std::string& type, const std::string& word) {
        return matrix_rows(bsdh::beta_matrix(make_word(type, word)));
      },
      py::arg("type"), py::arg("word"),
      "Upper-triangular pairing matrix of a word, as nested lists.");

  m.def(
      "positive_roots",
      [](const std::string& type) {
        std::vector<std::vector<int>> out;
        for (const bsdh::Root& r : bsdh::positive_roots(bsdh::parse_simple_type(type))) {
          out.push_back(r.coeffs);
        }
        return out;
      },
      py::arg("type"), "Positive roots in the simple-root basis, sorted.");

  m.def(
      "reduced_words",
      [](const std::string& type, const std::string& word) {
        std::vector<std::vector<int>> out;
        for (const bsdh::Word& w :
             bsdh::reduced_words(bsdh::element_of(make_word(type, word)))) {
          out.push_back(w.letters);
        }
        return out;
      },
      py::arg("type"), py::arg("word"),
      "All reduced words for the element the given word evaluates to.");

  m.def(
      "is_reduced",
      [](const std::string& type, const std::string& word) {
        return bsdh::is_reduced(make_word(type, word));
      },
      py::arg("type"), py::arg("word"),
      "Whether the word's length equals the length of its Weyl-group element.");

  m.def(
      "anticanonical_degrees",
      [](const std::string& type, const std::string& word) {
        return bsdh::anticanonical_degrees(bsdh::beta_matrix(make_word(type, word)));
      },
      py::arg("type"), py::arg("word"),
      "Anticanonical degrees along the extremal rays, one per letter.");
}
