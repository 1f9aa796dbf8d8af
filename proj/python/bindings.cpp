#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shapetop/connectedness.hpp"
#include "shapetop/error.hpp"
#include "shapetop/io.hpp"
#include "shapetop/mapping.hpp"
#include "shapetop/space.hpp"

namespace py = pybind11;
using namespace shapetop;

namespace {

Scalar to_scalar(const py::handle& value) { return Scalar::parse(py::str(value).cast<std::string>()); }

py::object to_fraction(const Scalar& s) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(s.to_string());
}

Point to_point(const py::handle& p) {
  auto seq = p.cast<py::sequence>();
  if (seq.size() != 2) {
    throw py::value_error("a point is a pair of coordinates");
  }
  return Point{to_scalar(seq[0]), to_scalar(seq[1])};
}

py::tuple point_tuple(const Point& p) { return py::make_tuple(to_fraction(p.x), to_fraction(p.y)); }

Kind kind_of(const std::string& name) {
  if (name == "U0") {
    return Kind::U0;
  }
  if (name == "U1") {
    return Kind::U1;
  }
  throw py::value_error("kind must be 'U0' or 'U1'");
}

py::dict equivalence_dict(const EquivalenceReport& r) {
  py::dict d;
  d["disconnected"] = r.disconnected;
  d["condition1"] = r.condition1;
  d["condition2"] = r.condition2;
  d["condition3"] = r.condition3;
  d["condition4"] = r.condition4;
  d["connected_opens_in_basis"] = r.connected_opens_in_basis;
  d["totally_disconnected"] = r.totally_disconnected();
  d["agree"] = r.all_agree();
  return d;
}

}  // namespace

PYBIND11_MODULE(_shapetop, m) {
  m.doc() = "Finite topologies on shapes with exact rational arithmetic";

  static py::exception<Error> shape_error(m, "ShapeError", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const Error& e) {
      py::object err = shape_error;
      py::object instance = err(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(shape_error.ptr(), instance.ptr());
    } catch (const ParseError& e) {
      parse_error(e.what());
    }
  });

  py::class_<Shape>(m, "Shape")
      .def(py::init([](const std::string& kind) { return Shape(kind_of(kind)); }), py::arg("kind") = "U1")
      .def_static("from_points",
                  [](const py::sequence& pts) {
                    std::vector<Point> v;
                    for (auto p : pts) {
                      v.push_back(to_point(p));
                    }
                    return Shape::from_points(std::move(v));
                  })
      .def_static("from_segments",
                  [](const py::sequence& segs) {
                    std::vector<Segment> v;
                    for (auto s : segs) {
                      auto pair = s.cast<py::sequence>();
                      if (pair.size() != 2) {
                        throw py::value_error("a segment is a pair of points");
                      }
                      v.emplace_back(to_point(pair[0]), to_point(pair[1]));
                    }
                    return Shape::from_segments(std::move(v));
                  })
      .def_static("parse", [](const std::string& text) { return io::parse_shape(text, "<python>"); })
      .def_property_readonly("kind", [](const Shape& s) { return std::string(to_string(s.kind())); })
      .def_property_readonly("is_empty", &Shape::is_empty)
      .def("__len__", &Shape::size)
      .def("points",
           [](const Shape& s) {
             py::list out;
             for (const auto& p : s.points()) {
               out.append(point_tuple(p));
             }
             return out;
           })
      .def("segments",
           [](const Shape& s) {
             py::list out;
             for (const auto& seg : s.segments()) {
               out.append(py::make_tuple(point_tuple(seg.a()), point_tuple(seg.b())));
             }
             return out;
           })
      .def("text", &io::write_shape)
      .def("__add__", [](const Shape& a, const Shape& b) { return sum(a, b); })
      .def("__mul__", [](const Shape& a, const Shape& b) { return product(a, b); })
      .def("__sub__", [](const Shape& a, const Shape& b) { return difference(a, b); })
      .def("__le__", [](const Shape& a, const Shape& b) { return part_of(a, b); })
      .def("__eq__", [](const Shape& a, const Shape& b) { return a == b; })
      .def("__hash__", [](const Shape& s) { return py::hash(py::str(io::write_shape(s))); })
      .def("__repr__", [](const Shape& s) { return "Shape(" + io::inline_shape(s) + ")"; });

  m.def("part_of", &part_of);
  m.def("boundary", &boundary);
  m.def("touches", &touches);
  m.def("visually_connected", &visually_connected);

  py::class_<Topology>(m, "Topology")
      .def_static("from_opens", &Topology::from_opens, py::arg("carrier"), py::arg("opens"))
      .def_static("parse", [](const std::string& text) { return io::parse_topology(text, "<python>"); })
      .def_static("load", [](const std::string& path) { return io::load_topology(path); })
      .def_property_readonly("carrier", &Topology::carrier)
      .def_property_readonly("opens", &Topology::opens)
      .def("__len__", &Topology::size)
      .def("is_open", &Topology::is_open)
      .def("text", &io::write_topology)
      .def("dot", [](const Topology& t) { return io::topology_to_dot(t); })
      .def("__eq__", [](const Topology& a, const Topology& b) { return a == b; });

  m.def(
      "generate_topology",
      [](const std::vector<Shape>& parts, const Shape& carrier, bool add_carrier, std::size_t max_opens) {
        GenerateOptions opts;
        opts.add_carrier_if_needed = add_carrier;
        opts.max_opens = max_opens;
        return generate_topology(parts, carrier, opts);
      },
      py::arg("parts"), py::arg("carrier"), py::arg("add_carrier") = false, py::arg("max_opens") = kDefaultMaxOpens);
  m.def("is_topology", [](const std::vector<Shape>& family, const Shape& carrier) {
    const TopologyCheck r = is_topology(family, carrier);
    return py::make_tuple(r.ok, r.violation);
  });
  m.def("reduced_basis", [](const Topology& t) { return reduce_basis(t).elements(); });
  m.def("generate_from_basis", [](const Shape& carrier, const std::vector<Shape>& elements) {
    return generate_from_basis(Basis::from_elements(carrier, elements));
  });
  m.def("subshape_topology", &subshape_topology);
  m.def("compare", [](const Topology& a, const Topology& b) { return std::string(to_string(compare(a, b))); });
  m.def("interior", &interior);
  m.def("closure", &closure);
  m.def("classify", [](const Shape& x, const Topology& t) {
    const PartClass c = classify_part(x, t);
    py::dict d;
    d["open"] = c.open;
    d["closed"] = c.closed;
    d["clopen"] = c.clopen;
    d["dense"] = c.dense;
    d["interior"] = c.interior;
    d["closure"] = c.closure;
    return d;
  });

  m.def("star_topology", [](const Topology& t) {
    const SetTopology st = star_topology(t);
    std::vector<Shape> points;
    for (const auto& p : st.points) {
      points.push_back(p.shape);
    }
    return py::make_tuple(points, st.open_sets);
  });
  m.def("check_isomorphism", [](const Topology& t) { return check_isomorphism(t, star_topology(t)).ok; });

  py::class_<Mapping>(m, "Mapping")
      .def_static("parse", [](const std::string& text) { return io::parse_mapping(text, "<python>"); })
      .def_static("identity", &Mapping::identity);
  m.def("image", &image);
  m.def(
      "preimage",
      [](const Mapping& f, const Shape& y, const Shape& domain) -> std::optional<Shape> {
        const PreimageResult r = preimage(f, y, domain);
        if (!r.defined()) {
          return std::nullopt;
        }
        return r.shape();
      },
      py::arg("f"), py::arg("y"), py::arg("domain"));
  m.def("is_continuous", [](const Mapping& f, const Topology& source, const Topology& target) {
    return is_continuous(f, source, target).continuous;
  });

  m.def("find_separation", [](const Topology& t) -> std::optional<std::pair<Shape, Shape>> {
    const auto sep = find_separation(t);
    if (!sep) {
      return std::nullopt;
    }
    return std::make_pair(sep->c, sep->d);
  });
  m.def("is_connected_part", &is_connected_part);
  m.def("is_totally_disconnected", [](const Topology& t) { return equivalence_dict(is_totally_disconnected(t)); });
  m.def("report", [](const Shape& s, const Topology& t) {
    const ConnectivityReport r = report(s, t);
    py::dict d;
    d["structurally_connected"] = r.structurally_connected;
    d["visually_connected"] = r.visually_connected;
    d["locally_connected"] = r.locally_connected;
    d["totally_disconnected"] = r.totally_disconnected;
    return d;
  });
}
