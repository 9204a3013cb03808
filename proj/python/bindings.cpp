#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parhom/automorphism.hpp"
#include "parhom/corpus.hpp"
#include "parhom/errors.hpp"
#include "parhom/gadgets.hpp"
#include "parhom/homcount.hpp"
#include "parhom/parity.hpp"
#include "parhom/reductions.hpp"
#include "parhom/selfcheck.hpp"

namespace py = pybind11;
using namespace parhom;

namespace {

py::int_ to_python(const BigNat& n) { return py::int_(py::module_::import("builtins").attr("int")(n.str())); }

py::dict gadget_dict(const HardnessGadget& g) {
    py::dict d;
    d["beta"] = g.beta;
    d["s"] = g.hub;
    d["t"] = g.target;
    d["i"] = g.selector;
    d["O"] = g.outs;
    d["K"] = g.cancelled;
    d["k"] = g.walk_length;
    d["w"] = g.anchor;
    return d;
}

}  // namespace

PYBIND11_MODULE(_parhom, m) {
    m.doc() = "Parity homomorphism counting for cactus targets";

    // Translators registered later are tried first, so the base goes first.
    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", error.ptr());
    py::register_exception<InternalContradiction>(m, "InternalContradiction", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges", [](int n, const std::vector<Edge>& e) { return Graph::from_edges(n, e); })
        .def("order", &Graph::order)
        .def("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, int v) {
            auto s = g.neighbors(v);
            return std::vector<int>(s.begin(), s.end());
        })
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
        });

    m.def("parse_graph", [](const std::string& s) { return parse_graph(s); });
    m.def("serialize_graph", &serialize_graph);
    m.def("named_graph", &named_graph);
    m.def("named_graphs", [] {
        std::vector<std::string> names;
        for (const auto& n : named_graphs()) names.push_back(n.name);
        return names;
    });
    m.def("is_cactus", [](const Graph& g) { return is_cactus(g) && is_connected(g); });
    m.def("cactus_violation", &cactus_violation);

    m.def("automorphism_count", [](const Graph& g) { return automorphisms(g).size(); });
    m.def("find_involution", [](const Graph& g) { return find_involution(g); });
    m.def("orbits", &orbits);
    m.def("reduce", [](const Graph& g, std::optional<std::uint64_t> seed) {
        auto r = involution_free_reduction(g, seed);
        return py::make_tuple(r.final_graph, r.final_to_original);
    }, py::arg("g"), py::arg("seed") = py::none());

    m.def("walk_parity", &walk_parity);
    m.def("walk_count", [](const Graph& g, int u, int v, int k) { return to_python(walk_count(g, u, v, k)); });

    m.def("count_homs", [](const Graph& g, const Graph& h, const std::map<int, std::vector<int>>& pin) {
        PinningFunction p;
        for (const auto& [v, allowed] : pin) p.restrict(v, allowed);
        return to_python(count_pinned_homs(g, h, p, CountBudget::from_environment()));
    }, py::arg("g"), py::arg("h"), py::arg("pin") = std::map<int, std::vector<int>>{});
    m.def("count_homs_mod2", [](const Graph& g, const Graph& h) {
        return count_homs_mod2(g, h, CountBudget::from_environment());
    });
    m.def("z_general_is", &z_general_is);
    m.def("independent_set_parity", &independent_set_parity);

    m.def("find_hardness_gadget", [](const Graph& h) { return gadget_dict(find_hardness_gadget(h)); });
    m.def("gadget_text", [](const Graph& h) { return serialize_gadget(find_hardness_gadget(h)); });
    m.def("verify_gadget_text", [](const Graph& h, const std::string& text) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : verify_hardness_gadget(h, parse_gadget(text)).violations) out.emplace_back(v.clause, v.detail);
        return out;
    });

    m.def("classify", [](const Graph& h) {
        auto c = classify(h);
        py::dict d;
        d["verdict"] = to_string(c.verdict);
        d["reduced_order"] = c.reduction.final_graph.order();
        d["witness"] = c.witness ? py::object(gadget_dict(*c.witness)) : py::object(py::none());
        d["witness_component"] = c.witness_component;
        return d;
    });
    m.def("verify_reduction", [](const Graph& g, const Graph& h) {
        auto r = verify_reduction(g, h, find_hardness_gadget(h), CountBudget::from_environment());
        return py::make_tuple(r.source_parity, r.pinned_parity);
    });
    m.def("build_reduction", [](const Graph& g, const Graph& h) {
        auto inst = build_g_gamma(g, h, find_hardness_gadget(h));
        return py::make_tuple(inst.graph, inst.pin.entries());
    });

    m.def("selfcheck", [](std::uint64_t seed, const std::vector<int>& only) {
        SelfcheckOptions opt;
        opt.seed = seed;
        opt.only = only;
        auto r = run_selfcheck(opt);
        return py::make_tuple(r.ok(), r.text(false));
    }, py::arg("seed") = 1, py::arg("only") = std::vector<int>{});
}
