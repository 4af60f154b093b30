#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "topocheck/enumerate.hpp"
#include "topocheck/maps.hpp"
#include "topocheck/parallel.hpp"
#include "topocheck/search.hpp"
#include "topocheck/set_classes.hpp"
#include "topocheck/space_doc.hpp"
#include "topocheck/space_props.hpp"
#include "topocheck/tail_space.hpp"
#include "topocheck/verify.hpp"

namespace py = pybind11;
using namespace topocheck;

namespace {

/// Accepts a label string ("b,c"), an iterable of point indices, or a
/// PointSet.
PointSet to_set(const FiniteSpace& sp, const py::object& obj) {
  if (py::isinstance<PointSet>(obj)) {
    const PointSet a = obj.cast<PointSet>();
    require_member(sp, a);
    return a;
  }
  if (py::isinstance<py::str>(obj)) return parse_label_set(sp, obj.cast<std::string>());
  PointSet out = sp.empty_set();
  for (const py::handle& item : obj) {
    const int p = item.cast<int>();
    if (p < 0 || p >= sp.size()) throw py::index_error("point index out of range");
    out = out.with(p);
  }
  return out;
}

py::dict flag_dict(const auto& flags) {
  py::dict out;
  for (const auto& [name, value] : flags) out[py::str(std::string(name))] = value;
  return out;
}

py::list index_lists(const std::vector<PointSet>& sets) {
  py::list out;
  for (const PointSet& s : sets) out.append(s.indices());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite topological space calculator";

  static py::exception<Error> base(m, "TopocheckError");
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const Error& e) {
      py::set_error(base, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PointSet>(m, "PointSet")
      .def(py::init<int, std::uint64_t>(), py::arg("width"), py::arg("bits"))
      .def_property_readonly("width", &PointSet::width)
      .def_property_readonly("bits", &PointSet::bits)
      .def("indices", &PointSet::indices)
      .def("complement", &PointSet::complement)
      .def("__len__", &PointSet::size)
      .def("__contains__", &PointSet::contains)
      .def("__eq__", [](PointSet a, PointSet b) { return a == b; })
      .def("__repr__", [](PointSet a) { return "PointSet(" + a.to_string() + ")"; });

  py::class_<FiniteSpace>(m, "Space")
      .def_static("parse", [](const std::string& text) { return to_space(parse_space(text)); },
                  py::arg("text"))
      .def_static(
          "from_opens",
          [](int n, const std::vector<std::vector<int>>& opens, std::vector<std::string> labels,
             bool complete) {
            std::vector<PointSet> family;
            for (const auto& open : opens) family.push_back(PointSet::of(n, open));
            return validate_topology(n, family, complete ? TopologyMode::kComplete : TopologyMode::kStrict,
                                     std::move(labels));
          },
          py::arg("n"), py::arg("opens"), py::arg("labels") = std::vector<std::string>{},
          py::arg("complete") = false)
      .def_static("indiscrete", &FiniteSpace::indiscrete, py::arg("n"))
      .def_static("discrete", &FiniteSpace::discrete, py::arg("n"))
      .def_property_readonly("size", &FiniteSpace::size)
      .def_property_readonly("labels", &FiniteSpace::labels)
      .def("opens", [](const FiniteSpace& sp) { return index_lists(sp.opens()); })
      .def("set", &to_set, py::arg("points"))
      .def("format", [](const FiniteSpace& sp, const py::object& a) { return format_set(sp, to_set(sp, a)); })
      .def("canonical", &FiniteSpace::canonical)
      .def("render", [](const FiniteSpace& sp, std::string name) { return render_space(to_doc(sp, std::move(name))); },
           py::arg("name") = "X")
      .def("__eq__", [](const FiniteSpace& a, const FiniteSpace& b) { return a == b; })
      .def("__repr__", [](const FiniteSpace& sp) { return "Space(" + sp.canonical() + ")"; });

  m.def("interior", [](const FiniteSpace& sp, const py::object& a) { return interior(sp, to_set(sp, a)); });
  m.def("closure", [](const FiniteSpace& sp, const py::object& a) { return closure(sp, to_set(sp, a)); });
  m.def("kernel", [](const FiniteSpace& sp, const py::object& a) { return kernel(sp, to_set(sp, a)); });
  m.def("semi_closure", [](const FiniteSpace& sp, const py::object& a) { return semi_closure(sp, to_set(sp, a)); });
  m.def("semi_interior",
        [](const FiniteSpace& sp, const py::object& a) { return semi_interior(sp, to_set(sp, a)); });
  m.def("nd_singletons", &nd_singletons);
  m.def(
      "classify",
      [](const FiniteSpace& sp, const py::object& a) {
        const PointSet s = to_set(sp, a);
        py::dict out;
        const ClassReport r = sp.size() <= kExhaustiveWidth ? classify(sp, s) : classify_basic(sp, s);
        const auto flags = r.flags();
        const std::array<bool, ClassReport::kFlagCount> known{
            true, true, true, true, true, true, true, true, true,
            r.g_open.has_value(), r.g_closed.has_value(), r.sg_open.has_value(),
            r.sg_closed.has_value(), r.gs_closed.has_value(), r.hsg_closed.has_value()};
        for (std::size_t i = 0; i < flags.size(); ++i) {
          if (known[i]) out[py::str(std::string(flags[i].first))] = flags[i].second;
        }
        return out;
      },
      py::arg("space"), py::arg("set"));

  m.def("properties", [](const FiniteSpace& sp) {
    py::dict out;
    for (const SpacePredicate& p : space_predicates()) out[py::str(std::string(p.name))] = p.eval(sp);
    return out;
  });
  m.def("check", [](const FiniteSpace& sp, const std::string& query) { return parse_query(query).evaluate(sp); },
        py::arg("space"), py::arg("query"));

  m.def("product", [](const std::vector<FiniteSpace>& factors) { return product(factors).space; });
  m.def("sum", [](const std::vector<FiniteSpace>& parts) { return sum(parts).space; });
  m.def("subspace", [](const FiniteSpace& sp, const py::object& a) { return subspace(sp, to_set(sp, a)); });

  m.def(
      "classify_map",
      [](const FiniteSpace& domain, const FiniteSpace& codomain, std::vector<int> assign) {
        return flag_dict(map_classify(SpaceMap(domain, codomain, std::move(assign))).flags());
      },
      py::arg("domain"), py::arg("codomain"), py::arg("assign"));

  m.def("count", [](int n, bool oracle) { return oracle ? count_spaces_naive(n) : count_spaces(n); },
        py::arg("n"), py::arg("oracle") = false);
  m.def("enumerate", py::overload_cast<int>(&enumerate_spaces), py::arg("n"));

  m.def(
      "search",
      [](int n, std::optional<std::string> query, std::optional<std::string> quest,
         std::optional<std::size_t> limit) {
        if (query.has_value() == quest.has_value()) {
          throw Error(Errc::kInvalidArgument, "give exactly one of query and quest");
        }
        const SearchOptions options{n, limit, default_workers()};
        std::vector<Witness> found;
        py::gil_scoped_release release;
        if (query) {
          found = search(parse_query(*query), options);
        } else {
          const Quest* q = find_quest(*quest);
          if (!q) throw Error(Errc::kUnknownIdentifier, "unknown quest '" + *quest + "'");
          found = search(*q, options);
        }
        std::vector<std::string> out;
        for (const Witness& w : found) out.push_back(w.to_string());
        return out;
      },
      py::arg("n"), py::arg("query") = py::none(), py::arg("quest") = py::none(), py::arg("limit") = py::none());

  m.def(
      "verify",
      [](const std::string& suite) {
        const auto parsed = parse_suite(suite);
        if (!parsed) throw Error(Errc::kInvalidArgument, "unknown suite '" + suite + "'");
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = verify_suite(*parsed, default_workers());
        }
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const CheckResult& r : results) out.emplace_back(r.name, r.passed, r.detail);
        return out;
      },
      py::arg("suite") = "all");

  m.def(
      "tail_classify",
      [](const std::string& text) {
        const TailClassReport r = tail_classify(TailSet::parse(text));
        py::dict out;
        out["semi_open"] = r.semi_open;
        out["nowhere_dense"] = r.nowhere_dense;
        out["hsg_closed"] = r.hsg_closed;
        if (r.g_open) out["g_open"] = *r.g_open;
        return out;
      },
      py::arg("set"));
}
