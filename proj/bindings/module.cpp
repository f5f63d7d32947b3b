#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ngk/bounds.hpp"
#include "ngk/codecs.hpp"
#include "ngk/coloring.hpp"
#include "ngk/constructions.hpp"
#include "ngk/enumerate.hpp"
#include "ngk/graph.hpp"
#include "ngk/lcf.hpp"

namespace py = pybind11;
using namespace ngk;

namespace {

ColorBudget makeBudget(std::optional<double> seconds, std::optional<std::uint64_t> nodes) {
    ColorBudget b;
    b.timeLimitSeconds = seconds;
    b.nodeLimit = nodes;
    return b;
}

const char* statusName(ColorStatus s) {
    switch (s) {
        case ColorStatus::Colorable: return "colorable";
        case ColorStatus::NotColorable: return "not_colorable";
        default: return "budget_exhausted";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "small graphs with prescribed girth and chromatic number";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("order"))
        .def_static(
            "from_edges",
            [](int order, const std::vector<Edge>& edges) {
                return Graph::fromEdges(order, edges);
            },
            py::arg("order"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return decodeGraph6(s); })
        .def_static(
            "from_adjacency_list",
            [](const std::string& text, std::optional<int> order) {
                return parseAdjacencyList(text, order);
            },
            py::arg("text"), py::arg("order") = std::nullopt)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edgeCount)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::hasEdge)
        .def("add_edge", &Graph::addEdge)
        .def("remove_edge", &Graph::removeEdge)
        .def("edges", &Graph::edges)
        .def("to_graph6", [](const Graph& g) { return encodeGraph6(g); })
        .def("to_adjacency_list", [](const Graph& g) { return emitAdjacencyList(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph order=" + std::to_string(g.order()) +
                   " edges=" + std::to_string(g.edgeCount()) + ">";
        });

    m.def("girth", [](const Graph& g) { return girth(g); },
          "Length of the shortest cycle, or None for forests.");
    m.def("contains_cycle_shorter_than", &containsCycleShorterThan);
    m.def("contains_odd_cycle", &containsOddCycle);
    m.def(
        "count_cycles_of_length",
        [](const Graph& g, int length, std::optional<std::vector<Edge>> among) {
            return among ? countCyclesOfLength(g, length, *among)
                         : countCyclesOfLength(g, length);
        },
        py::arg("graph"), py::arg("length"), py::arg("among") = std::nullopt);
    m.def("degree_summary", [](const Graph& g) {
        DegreeSummary d = degreeSummary(g);
        return py::make_tuple(d.minDegree, d.maxDegree, d.isRegular);
    });

    m.def(
        "decide_k_colorable",
        [](const Graph& g, int k, std::optional<double> seconds,
           std::optional<std::uint64_t> nodes) {
            ColorDecision d = decideKColorable(g, k, nullptr, makeBudget(seconds, nodes));
            py::dict out;
            out["status"] = statusName(d.status);
            out["nodes"] = d.nodesExplored;
            if (d.witness) out["coloring"] = d.witness->assignment;
            return out;
        },
        py::arg("graph"), py::arg("k"), py::arg("seconds") = std::nullopt,
        py::arg("nodes") = std::nullopt);
    m.def(
        "chromatic_number",
        [](const Graph& g, std::optional<double> seconds, std::optional<std::uint64_t> nodes) {
            ChromaticResult r = chromaticNumber(g, makeBudget(seconds, nodes));
            py::dict out;
            if (r.exact) out["exact"] = *r.exact;
            out["lower"] = r.lower;
            out["upper"] = r.upper;
            if (r.witness) out["coloring"] = r.witness->assignment;
            return out;
        },
        py::arg("graph"), py::arg("seconds") = std::nullopt, py::arg("nodes") = std::nullopt);
    m.def(
        "random_colourable",
        [](int k, const Graph& g, std::uint64_t seed, int restarts)
            -> std::optional<std::vector<int>> {
            LocalSearchEffort effort;
            effort.restarts = restarts;
            auto w = randomColourable(k, g, effort, seed);
            if (!w) return std::nullopt;
            return w->assignment;
        },
        py::arg("k"), py::arg("graph"), py::arg("seed") = 1, py::arg("restarts") = 4);
    m.def(
        "is_vertex_critical",
        [](const Graph& g, int k, int jobs) {
            switch (isVertexCritical(g, k, ColorBudget::unlimited(), jobs)) {
                case CriticalityStatus::Critical: return "critical";
                case CriticalityStatus::NotCritical: return "not_critical";
                default: return "budget_exhausted";
            }
        },
        py::arg("graph"), py::arg("k"), py::arg("jobs") = 1);

    m.def("mycielski", &mycielski);
    m.def("droogendijk_construct", [](const Graph& g, const std::vector<int>& s) {
        return droogendijkConstruct(g, s);
    });
    m.def("droogendijk_parts", [](const Graph& g, const std::vector<int>& s) {
        DroogendijkParts p = droogendijkParts(g, s);
        py::dict out;
        out["s"] = p.s;
        out["a"] = p.a;
        out["b"] = p.b;
        out["order"] = p.constructedOrder;
        return out;
    });
    m.def(
        "droogendijk_condition_holds",
        [](const Graph& g, const std::vector<int>& s, int k) -> std::optional<bool> {
            switch (droogendijkConditionHolds(g, s, k)) {
                case ConditionStatus::Holds: return true;
                case ConditionStatus::Fails: return false;
                default: return std::nullopt;
            }
        },
        py::arg("graph"), py::arg("s"), py::arg("k"));

    py::class_<LcfScheme>(m, "LcfScheme")
        .def_readonly("row_count", &LcfScheme::rowCount)
        .def_readonly("cycle_length", &LcfScheme::cycleLength)
        .def_readonly("rows", &LcfScheme::rows)
        .def_property_readonly("order", &LcfScheme::order)
        .def("__repr__", [](const LcfScheme& s) {
            return "<LcfScheme r=" + std::to_string(s.rowCount) +
                   " s=" + std::to_string(s.cycleLength) + ">";
        });

    m.def("parse_lcf_table", [](const std::string& text, int s) {
        return parseLcfTable(text, s);
    });
    m.def("emit_lcf_table", &emitLcfTable);
    m.def("realize", &realize);
    m.def("shift_preserves_edges", &shiftPreservesEdges);
    m.def("get_orbits", [](int r, int s) {
        std::vector<py::dict> out;
        for (const EdgeOrbit& o : getOrbits(r, s)) {
            py::dict d;
            d["row"] = o.row;
            d["offset"] = o.offset;
            d["edges"] = o.edges;
            out.push_back(d);
        }
        return out;
    });
    m.def(
        "basic_search",
        [](int g, int r, int s, int k, std::uint64_t seed,
           std::optional<std::uint64_t> maxIters,
           std::optional<double> seconds) -> std::optional<py::tuple> {
            SearchBudget budget;
            budget.seed = seed;
            budget.maxOuterIterations = maxIters;
            budget.wallClockSeconds = seconds;
            auto result = basicSearch(g, r, s, k, budget);
            if (!result) return std::nullopt;
            return py::make_tuple(result->graph, emitLcfTable(result->scheme),
                                  result->outerIterations);
        },
        py::arg("g"), py::arg("r"), py::arg("s"), py::arg("k"), py::arg("seed") = 1,
        py::arg("max_iterations") = std::nullopt, py::arg("seconds") = std::nullopt);
    m.def(
        "even_girth_search",
        [](int g, int r, int s, int k, std::uint64_t seed, double randomPickFraction,
           std::optional<int> oddCycleThreshold, std::optional<std::uint64_t> maxIters,
           std::optional<double> seconds) -> std::optional<py::tuple> {
            SearchBudget budget;
            budget.seed = seed;
            budget.maxOuterIterations = maxIters;
            budget.wallClockSeconds = seconds;
            EvenGirthHeuristics h;
            h.randomPickFraction = randomPickFraction;
            h.earlyOddCycleEdgeThreshold = oddCycleThreshold;
            auto result = evenGirthSearch(g, r, s, k, budget, h);
            if (!result) return std::nullopt;
            return py::make_tuple(result->graph, emitLcfTable(result->scheme),
                                  result->outerIterations);
        },
        py::arg("g"), py::arg("r"), py::arg("s"), py::arg("k"), py::arg("seed") = 1,
        py::arg("random_pick_fraction") = 0.25, py::arg("odd_cycle_threshold") = std::nullopt,
        py::arg("max_iterations") = std::nullopt, py::arg("seconds") = std::nullopt);

    m.def("lemma1_bound", &lemma1Bound);
    m.def("moore_bound", &mooreBound);
    m.def("lemma3_bound", &lemma3Bound);
    m.def(
        "bounds_table",
        [](int gmax, int kmax, std::optional<std::string> anchorsPath) {
            AnchorSet anchors = anchorsPath ? AnchorSet::fromJsonFile(*anchorsPath)
                                            : AnchorSet::defaults();
            BoundsTable t = buildBoundsTable(anchors, gmax, kmax);
            py::dict out;
            for (auto& [gk, cell] : t.cells) {
                py::dict c;
                c["lower"] = cell.lower;
                if (cell.upper) c["upper"] = *cell.upper;
                c["exact"] = cell.exact;
                c["lower_from"] = cell.lowerProvenance;
                out[py::make_tuple(gk.first, gk.second)] = c;
            }
            return out;
        },
        py::arg("gmax") = 7, py::arg("kmax") = 8, py::arg("anchors_path") = std::nullopt);

    m.def(
        "generate",
        [](int maxOrder, int girthMin, int minDegree, int maxDegree, int cap) {
            GenerationConstraints c;
            c.maxOrder = maxOrder;
            c.girthMin = girthMin;
            c.minDegree = minDegree;
            c.maxDegree = maxDegree;
            std::vector<Graph> out;
            generate(c, [&](const Graph& g) {
                out.push_back(g);
                return true;
            }, cap);
            return out;
        },
        py::arg("max_order"), py::arg("girth_min") = 3, py::arg("min_degree") = 0,
        py::arg("max_degree") = 15, py::arg("cap") = 11);
    m.def(
        "certify_all_colorable",
        [](int maxOrder, int girthMin, int k, int cap) {
            GenerationConstraints c;
            c.maxOrder = maxOrder;
            c.girthMin = girthMin;
            CertifyResult r = certifyAllColorable(c, k, cap);
            py::dict out;
            out["all_colorable"] = r.allColorable;
            out["visited"] = r.visited;
            if (r.counterexample) out["counterexample"] = *r.counterexample;
            return out;
        },
        py::arg("max_order"), py::arg("girth_min"), py::arg("k"), py::arg("cap") = 11);
}
