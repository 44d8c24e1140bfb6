#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "io_json.hpp"
#include "phenylene/chain_circuit.hpp"
#include "phenylene/errors.hpp"
#include "phenylene/extremal.hpp"
#include "phenylene/io.hpp"
#include "phenylene/laplacian.hpp"
#include "phenylene/reduction.hpp"
#include "phenylene/st_isomer.hpp"

namespace py = pybind11;
using namespace phenylene;

// Rational <-> fractions.Fraction. Ints and "p/q" strings are accepted too.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = Rational::parse(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
        const auto num = py::str(src.attr("numerator")).cast<std::string>();
        const auto den = py::str(src.attr("denominator")).cast<std::string>();
        value = Rational::parse(num + "/" + den);
        return true;
      }
    } catch (const Error&) {
      return false;
    }
    return false;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.to_string()).release();
  }
};
}  // namespace pybind11::detail

namespace {

py::object loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

std::vector<std::tuple<VertexId, VertexId, Rational>> edge_tuples(const ResistanceNetwork& net) {
  std::vector<std::tuple<VertexId, VertexId, Rational>> out;
  for (const auto& e : net.edges()) out.emplace_back(e.u, e.v, e.resistance);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact resistance distances and Kirchhoff indices of phenylene chains";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ArithmeticError>(m, "ArithmeticError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
  py::register_exception<NotReducible>(m, "NotReducible", base.ptr());
  py::register_exception<ConnectivityError>(m, "ConnectivityError", base.ptr());
  py::register_exception<InvalidPair>(m, "InvalidPair", base.ptr());
  py::register_exception<LabelingError>(m, "LabelingError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<ChainCode>(m, "ChainCode")
      .def(py::init<int, std::vector<std::uint8_t>>(), py::arg("n"), py::arg("w"))
      .def_static("parse", [](const std::string& s) { return ChainCode::parse(s); })
      .def_static("helicene", &ChainCode::helicene)
      .def_static("linear", &ChainCode::linear)
      .def_property_readonly("n", &ChainCode::n)
      .def_property_readonly("word", &ChainCode::word)
      .def("canonical", [](const ChainCode& c) { return canonical_code(c); })
      .def("orbit", [](const ChainCode& c) { return code_orbit(c); })
      .def("is_all_kink", [](const ChainCode& c) { return is_all_kink(c); })
      .def("__str__", &ChainCode::to_string)
      .def("__repr__",
           [](const ChainCode& c) {
             return "ChainCode(n=" + std::to_string(c.n()) + ", w='" + c.to_string() + "')";
           })
      .def("__eq__", [](const ChainCode& a, const ChainCode& b) { return a == b; })
      .def("__lt__", [](const ChainCode& a, const ChainCode& b) { return a < b; })
      .def("__hash__", [](const ChainCode& c) {
        return py::hash(py::make_tuple(c.n(), c.to_string()));
      });

  py::class_<ResistanceNetwork>(m, "ResistanceNetwork")
      .def(py::init<>())
      .def("add_vertex", &ResistanceNetwork::add_vertex)
      .def("add_edge", &ResistanceNetwork::add_edge, py::arg("u"), py::arg("v"),
           py::arg("resistance") = Rational(1))
      .def_property_readonly("vertices", &ResistanceNetwork::vertices)
      .def_property_readonly("edges", &edge_tuples)
      .def("degree", &ResistanceNetwork::degree)
      .def("neighbors", &ResistanceNetwork::neighbors)
      .def("is_connected", &ResistanceNetwork::is_connected)
      .def("__len__", &ResistanceNetwork::vertex_count)
      .def("__eq__", [](const ResistanceNetwork& a, const ResistanceNetwork& b) { return a == b; })
      .def("to_dot", [](const ResistanceNetwork& n) { return to_dot(n); })
      .def("to_edge_list", [](const ResistanceNetwork& n) { return to_edge_list(n); })
      .def_static("from_edge_list", [](const std::string& s) { return parse_edge_list(s); });

  py::class_<LabeledChain>(m, "LabeledChain")
      .def_readonly("code", &LabeledChain::code)
      .def_readonly("network", &LabeledChain::network)
      .def_readonly("hexagons", &LabeledChain::hexagons)
      .def_property_readonly("squares",
                             [](const LabeledChain& c) {
                               py::list out;
                               for (const auto& s : c.squares) {
                                 py::dict d;
                                 d["a"] = s.a;
                                 d["b"] = s.b;
                                 d["k"] = s.k;
                                 d["l"] = s.l;
                                 out.append(d);
                               }
                               return out;
                             })
      .def("to_dot", [](const LabeledChain& c) { return to_dot(c); });

  m.def("build_ladder", &build_ladder, py::arg("m"));
  m.def("build_chain", &build_chain, py::arg("code"));

  m.def("effective_resistance", &effective_resistance, py::arg("network"), py::arg("u"),
        py::arg("v"));
  m.def(
      "resistance_matrix",
      [](const ResistanceNetwork& net) {
        const auto rm = resistance_matrix(net);
        std::vector<std::vector<Rational>> rows(rm.order.size());
        for (std::size_t i = 0; i < rm.order.size(); ++i) {
          for (std::size_t j = 0; j < rm.order.size(); ++j) rows[i].push_back(rm.r(i, j));
        }
        return py::make_tuple(rm.order, rows);
      },
      py::arg("network"), "Returns (vertex order, rows of exact resistances).");
  m.def("kirchhoff_index", py::overload_cast<const ResistanceNetwork&>(&kirchhoff_index),
        py::arg("network"));

  m.def("series_reduce", [](const ResistanceNetwork& n, VertexId y) {
    return series_reduce(n, y);
  });
  m.def("parallel_reduce", [](const ResistanceNetwork& n, VertexId x, VertexId y) {
    return parallel_reduce(n, x, y);
  });
  m.def("delta_y", [](const ResistanceNetwork& n, VertexId x, VertexId y, VertexId z) {
    return delta_y(n, x, y, z);
  });
  m.def("star_mesh_eliminate", [](const ResistanceNetwork& n, VertexId v) {
    return star_mesh_eliminate(n, v);
  });

  m.def(
      "lemma4",
      [](const ResistanceNetwork& a_side, VertexId a, VertexId l, const ResistanceNetwork& b_side,
         VertexId b, VertexId k) {
        return loads(lemma4_json(verify_lemma4(STPair{a_side, a, l, b_side, b, k})));
      },
      py::arg("a_side"), py::arg("a"), py::arg("l"), py::arg("b_side"), py::arg("b"),
      py::arg("k"));

  m.def("kf_of_code", [](const ChainCode& c) { return kf_of_code(c).kf; }, py::arg("code"));
  m.def(
      "find_extrema",
      [](int n, std::size_t cap) {
        const auto t = find_extrema(n, cap);
        py::dict d;
        d["n"] = n;
        d["min_kf"] = t.min_kf;
        d["max_kf"] = t.max_kf;
        d["min_class"] = t.min_class;
        d["max_class"] = t.max_class;
        py::dict kf;
        for (const auto& r : t.reports) kf[py::str(r.code.to_string())] = r.kf;
        d["kf"] = kf;
        return d;
      },
      py::arg("n"), py::arg("cap") = kDefaultExhaustiveCap);

  m.def(
      "verify_conjecture",
      [](int n, std::size_t cap) { return loads(conjecture_json(verify_conjecture(n, cap))); },
      py::arg("n"), py::arg("cap") = kDefaultExhaustiveCap);
  m.def(
      "verify_theorem1",
      [](int n, std::size_t cap) { return loads(theorem1_json(verify_theorem1(n, cap))); },
      py::arg("n"), py::arg("cap") = kDefaultExhaustiveCap);
  m.def(
      "verify_kink_flips", [](int n) { return loads(kink_flip_json(verify_kink_flips(n))); },
      py::arg("n"));
  m.def(
      "check_lemma5",
      [](int n, std::optional<std::vector<std::uint8_t>> interior) {
        return loads(lemma5_json(check_lemma5(n, {}, std::move(interior))));
      },
      py::arg("n"), py::arg("interior") = py::none());
  m.def(
      "check_lemma6", [](const ChainCode& c) { return loads(lemma6_json(check_lemma6(c))); },
      py::arg("code"));
  m.def(
      "weighted_hexagon_check",
      [](const Rational& r) { return loads(hexagon_json(weighted_hexagon_check(r))); },
      py::arg("r"));
  m.def(
      "reduce_terminal_chain",
      [](int n, std::optional<std::vector<std::uint8_t>> interior, const std::string& source) {
        if (source != "a" && source != "l") throw InvalidParameter("source must be 'a' or 'l'");
        const auto chain = build_terminal_chain(n, {}, std::move(interior));
        return loads(reduction_json(
            simplify_chain_circuit(chain, source == "a" ? SourceCorner::a : SourceCorner::l)));
      },
      py::arg("n"), py::arg("interior") = py::none(), py::arg("source") = "a");
}
