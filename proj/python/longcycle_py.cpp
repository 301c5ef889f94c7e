#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "longcycle/engine.hpp"
#include "longcycle/error.hpp"
#include "longcycle/instances.hpp"
#include "longcycle/oracle.hpp"

namespace py = pybind11;
using namespace longcycle;

namespace {

// Graphs cross the boundary as rotation lists: rotations[v] = neighbours of v
// in counter-clockwise order.
using Rotations = std::vector<std::vector<VertexId>>;

PlanarEmbedding embed(const Rotations& rotations) { return PlanarEmbedding::build(RotationTable(rotations)); }

py::dict certificate_dict(const Certificate& c) {
    py::dict d;
    d["n"] = c.n;
    d["c"] = c.c;
    d["mu"] = c.mu;
    d["bound"] = c.bound;
    d["sum_w0"] = c.sum_w0;
    d["sum_w1"] = c.sum_w1;
    d["ineq_i"] = c.ineq_i;
    d["ineq_ii"] = c.ineq_ii;
    d["iii_violations"] = c.iii_violations;
    d["fixpoint"] = c.fixpoint;
    d["certified"] = c.certified();
    return d;
}

}  // namespace

PYBIND11_MODULE(_longcycle, m) {
    m.doc() = "Long cycles in essentially 4-connected planar graphs";

    static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    m.def("length_bound", &length_bound, py::arg("n"));

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text).rotations(); }, py::arg("text"));
    m.def("serialize_graph", [](const Rotations& r) { return serialize_graph(RotationTable(r)); },
          py::arg("rotations"));

    m.def("named_graph_names", &named_graph_names);
    m.def("named_graph", [](const std::string& name) { return named_graph(name).embedding.table().rotations(); },
          py::arg("name"));

    m.def(
        "check_essentially_4_connected",
        [](const Rotations& r) {
            const ConnectivityVerdict v = check_essentially_4_connected(embed(r));
            py::dict d;
            d["connectivity"] = v.connectivity;
            d["three_connected"] = v.is_3_connected;
            d["essentially_4_connected"] = v.is_essentially_4_connected;
            d["witness"] = v.witness;
            return d;
        },
        py::arg("rotations"));

    m.def(
        "validate_oi3",
        [](const Rotations& r, const std::vector<VertexId>& cycle) {
            const PlanarEmbedding emb = embed(r);
            return validate_oi3(emb, CycleSeq::from(emb.table(), cycle)).valid;
        },
        py::arg("rotations"), py::arg("cycle"));

    m.def(
        "certify",
        [](const Rotations& r, const std::vector<VertexId>& cycle) {
            const PlanarEmbedding emb = embed(r);
            return certificate_dict(certify(emb, CycleSeq::from(emb.table(), cycle)));
        },
        py::arg("rotations"), py::arg("cycle"));

    m.def(
        "find_cycle",
        [](const Rotations& r, std::optional<std::vector<VertexId>> initial) {
            const PlanarEmbedding emb = embed(r);
            std::optional<CycleSeq> start;
            if (initial) start = CycleSeq::from(emb.table(), *initial);
            Solution sol;
            {
                py::gil_scoped_release release;
                sol = solve(emb, start);
            }
            py::dict d;
            d["cycle"] = sol.cycle.vertices();
            d["certificate"] = certificate_dict(sol.certificate);
            d["iterations"] = sol.trace.iterations;
            return d;
        },
        py::arg("rotations"), py::arg("initial") = py::none());

    m.def(
        "longest_cycle",
        [](const Rotations& r) {
            const LongestCycle lc = longest_cycle_exact(embed(r));
            return py::make_tuple(lc.length, lc.witness ? py::cast(lc.witness->vertices()) : py::none());
        },
        py::arg("rotations"));

    m.def(
        "gen_inserted_antiprism",
        [](int k) {
            const GeneratedInstance inst = gen_inserted_antiprism(k);
            return py::make_tuple(inst.graph.table().rotations(), inst.initial_cycle.vertices());
        },
        py::arg("k"));
    m.def("antiprism_hamiltonian_cycle", &antiprism_hamiltonian_cycle, py::arg("k"));
}
