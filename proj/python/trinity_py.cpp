#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trinity/digraph.hpp"
#include "trinity/error.hpp"
#include "trinity/families.hpp"
#include "trinity/io.hpp"
#include "trinity/latin.hpp"
#include "trinity/verify.hpp"
#include "trinity/zlinalg.hpp"

namespace py = pybind11;
using namespace trinity;

namespace {

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.get_str())); }

IntMatrix from_py(const std::vector<std::vector<py::int_>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) a(i, j) = Integer(py::str(rows[i][j]).cast<std::string>());
  }
  return a;
}

py::list to_py(const IntMatrix& a) {
  py::list rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < a.cols(); ++j) row.append(to_py(a(i, j)));
    rows.append(row);
  }
  return rows;
}

py::tuple group_tuple(const AbelianGroup& g) {
  py::list f;
  for (const auto& x : g.invariant_factors()) f.append(to_py(x));
  return py::make_tuple(g.free_rank(), py::tuple(f));
}

// Documents cross the boundary as JSON text; the package decodes them.
std::string doc_text(const FamilyInstance& f) {
  return dump(to_json(make_document(f.embedded, {{"family", f.family}, {"params", f.params}, {"name", f.name()},
                                                 {"expected_group", group_json(f.expected_group)}})));
}

}  // namespace

PYBIND11_MODULE(_trinity, m) {
  m.doc() = "Smith normal forms, sandpile groups and spherical latin bitrades.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("snf", [](const std::vector<std::vector<py::int_>>& a) {
    const SnfResult r = snf(from_py(a));
    return py::make_tuple(to_py(r.S), to_py(r.U), to_py(r.V));
  }, "Smith normal form (S, U, V) with U A V = S.");

  m.def("smith_diagonal", [](const std::vector<std::vector<py::int_>>& a) {
    py::list out;
    for (const auto& x : smith_diagonal(from_py(a))) out.append(to_py(x));
    return out;
  });

  m.def("cokernel", [](const std::vector<std::vector<py::int_>>& a) { return group_tuple(cokernel(from_py(a))); },
        "Z^cols / row span, as (free_rank, invariant_factors).");

  m.def("group_text", [](const std::vector<long>& orders) {
    std::vector<Integer> o(orders.begin(), orders.end());
    return group_from_cyclic_orders(o).to_string();
  });

  m.def("parse_group_spec", [](const std::string& s) { return group_tuple(parse_group_spec(s)); });

  m.def("sandpile_group", [](const std::string& document) {
    return group_tuple(sandpile_group(parse_digraph_document(document).digraph));
  }, "Sandpile group of a digraph document (JSON text).");

  m.def("build_family", [](const std::string& family, const std::vector<long>& params) {
    return doc_text(build_family(family, params));
  }, py::arg("family"), py::arg("params"));

  m.def("plan_group", [](const std::string& spec) {
    const Plan p = plan_group(parse_group_spec(spec));
    py::dict d;
    d["verdict"] = to_string(p.verdict);
    d["notes"] = p.notes;
    d["recipe"] = p.recipe ? py::object(py::make_tuple(p.recipe->family, p.recipe->params)) : py::none();
    d["document"] = p.instance ? py::object(py::str(doc_text(*p.instance))) : py::none();
    return d;
  });

  m.def("canonical_group", [](const std::vector<Triple>& triples) {
    return group_tuple(canonical_group(PartialLatinSquare(triples)).group);
  });

  m.def("enumerate_bitrades", [](std::size_t max_size, std::size_t threads) {
    EnumerationOptions o;
    o.threads = threads;
    py::list out;
    for (const auto& x : enumerate_spherical_bitrades(max_size, o).bitrades)
      out.append(py::make_tuple(x.W().triples(), x.B().triples()));
    return out;
  }, py::arg("max_size"), py::arg("threads") = 1);

  m.def("run_suite", [](const std::string& suite, std::size_t max) {
    return dump(run_suite(suite, max ? max : default_suite_max(suite)).to_json());
  }, py::arg("suite"), py::arg("max") = 0);
}
