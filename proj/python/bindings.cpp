#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fideal/complex.hpp"
#include "fideal/enumeration.hpp"
#include "fideal/error.hpp"
#include "fideal/ideal.hpp"
#include "fideal/invariants.hpp"
#include "fideal/json_io.hpp"

namespace py = pybind11;

namespace {

using fideal::VertexSubset;

std::vector<std::vector<int>> to_lists(std::span<const VertexSubset> sets) {
  std::vector<std::vector<int>> out;
  for (auto s : sets) out.push_back(s.vertices());
  return out;
}

std::vector<VertexSubset> from_lists(const std::vector<std::vector<int>>& lists, int n) {
  std::vector<VertexSubset> out;
  for (const auto& l : lists) {
    for (int v : l) {
      if (v < 1 || v > n) {
        throw fideal::Error(fideal::ErrorCode::kIndexOutOfRange,
                            "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
    }
    out.push_back(VertexSubset::from_vertices(l));
  }
  return out;
}

// JSON values cross the boundary as Python objects via the json module.
py::object to_py(const fideal::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_fideal, m) {
  m.doc() = "Facet and non-face complexes of square-free monomial ideals";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() {
    return py::exception<fideal::Error>(m, "FidealError", PyExc_ValueError);
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const fideal::Error& e) {
      std::string msg = std::string(fideal::to_string(e.code())) + ": " + e.what();
      if (e.position()) {
        msg += " (line " + std::to_string(e.position()->line) + ", column " +
               std::to_string(e.position()->column) + ")";
      }
      py::set_error(error_type.get_stored(), msg.c_str());
    }
  });

  m.attr("DEFAULT_AMBIENT_LIMIT") = fideal::kDefaultAmbientLimit;

  py::class_<fideal::Ideal>(m, "Ideal")
      .def(py::init([](int n, const std::vector<std::vector<int>>& gens, int limit) {
             return fideal::Ideal::from_generators(n, from_lists(gens, n), limit);
           }),
           py::arg("n"), py::arg("generators"),
           py::arg("ambient_limit") = fideal::kDefaultAmbientLimit)
      .def_property_readonly("n", &fideal::Ideal::n)
      .def_property_readonly("generators",
                             [](const fideal::Ideal& i) { return to_lists(i.generators()); })
      .def("__len__", &fideal::Ideal::size)
      .def("__eq__", [](const fideal::Ideal& a, const fideal::Ideal& b) { return a == b; })
      .def("__str__", &fideal::to_text)
      .def("__repr__", [](const fideal::Ideal& i) { return "Ideal(\"" + fideal::to_text(i) + "\")"; })
      .def("to_json", [](const fideal::Ideal& i) { return to_py(fideal::to_json(i)); });

  py::class_<fideal::SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init([](int n, const std::vector<std::vector<int>>& faces) {
             return fideal::SimplicialComplex::from_faces(n, from_lists(faces, n));
           }),
           py::arg("n"), py::arg("faces"))
      .def_property_readonly("n", &fideal::SimplicialComplex::n)
      .def_property_readonly("facets", [](const fideal::SimplicialComplex& c) {
        return to_lists(c.facets());
      })
      .def("__eq__", [](const fideal::SimplicialComplex& a, const fideal::SimplicialComplex& b) {
        return a == b;
      })
      .def("to_json", [](const fideal::SimplicialComplex& c) { return to_py(fideal::to_json(c)); });

  m.def("parse_ideal", &fideal::parse_ideal, py::arg("text"),
        py::arg("ambient_limit") = fideal::kDefaultAmbientLimit);
  m.def("minimalize", [](const std::vector<std::vector<int>>& sets) {
    return to_lists(fideal::minimalize(from_lists(sets, fideal::kMaxAmbient)));
  });
  m.def("stats", [](const fideal::Ideal& i) {
    const auto s = fideal::stats(i);
    py::dict d;
    d["m"] = s.m;
    d["degree"] = s.degree;
    d["support"] = s.support.vertices();
    d["pure_of_degree"] = s.pure_of_degree ? py::object(py::int_(*s.pure_of_degree)) : py::none();
    return d;
  });
  m.def("contains_monomial", [](const fideal::Ideal& i, const std::vector<int>& s) {
    return fideal::contains_monomial(i, from_lists({s}, i.n()).front());
  });

  m.def("facet_complex", &fideal::facet_complex);
  m.def("nonface_complex", &fideal::nonface_complex);
  m.def("f_vector",
        [](const fideal::SimplicialComplex& c, int limit) {
          const auto f = fideal::f_vector(c, limit);
          return std::vector<std::uint64_t>(f.counts().begin(), f.counts().end());
        },
        py::arg("complex"), py::arg("ambient_limit") = fideal::kDefaultAmbientLimit);
  m.def("dimension", &fideal::dimension);
  m.def("facet_ideal", &fideal::facet_ideal, py::arg("complex"),
        py::arg("ambient_limit") = fideal::kDefaultAmbientLimit);
  m.def("nonface_ideal", &fideal::nonface_ideal, py::arg("complex"),
        py::arg("ambient_limit") = fideal::kDefaultAmbientLimit);

  m.def("minimal_vertex_covers",
        [](const fideal::Ideal& i) { return to_py(fideal::to_json(fideal::minimal_vertex_covers(i))); });
  m.def("height", &fideal::height);
  m.def("check_lemma_binomial", &fideal::check_lemma_binomial);
  m.def("check_lemma_dimension", &fideal::check_lemma_dimension);
  m.def("is_f_ideal", [](const fideal::Ideal& i) {
    const auto v = fideal::is_f_ideal(i);
    return py::make_tuple(v.f_ideal, to_py(fideal::to_json(v.f_facet)),
                          to_py(fideal::to_json(v.f_nonface)));
  });
  m.def("theorem_classify",
        [](const fideal::Ideal& i) { return to_py(fideal::to_json(fideal::theorem_classify(i))); });

  m.def("count_pure", [](int n, int d) {
    std::uint64_t count = 0;
    fideal::for_each_pure(n, d, [&](const fideal::Ideal&) { ++count; });
    return count;
  });
  m.def("enumerate_pure", [](int n, int d) { return fideal::enumerate_pure(n, d); });
  m.def(
      "run_census",
      [](int n, int degree, std::optional<std::uint64_t> sample,
         std::optional<std::uint64_t> seed, unsigned threads,
         std::optional<std::size_t> generator_count,
         std::optional<std::filesystem::path> catalog) {
        fideal::CensusOptions opts;
        opts.n = n;
        opts.degree = degree;
        opts.sample = sample;
        opts.seed = seed;
        opts.threads = threads;
        opts.generator_count = generator_count;
        opts.catalog = catalog;
        fideal::CensusRow row;
        {
          py::gil_scoped_release release;
          row = fideal::run_census(opts);
        }
        return to_py(fideal::to_json(row));
      },
      py::arg("n"), py::arg("degree") = 2, py::arg("sample") = py::none(),
      py::arg("seed") = py::none(), py::arg("threads") = 0,
      py::arg("generator_count") = py::none(), py::arg("catalog") = py::none());
}
