#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "longcycle/oi3.hpp"
#include "longcycle/planar.hpp"

namespace longcycle {

// Facts recorded alongside a named graph. Tests recompute them; nothing
// downstream reads them as truth.
struct KnownFacts {
    int connectivity = 0;
    bool essentially_4_connected = false;
    std::optional<int> circumference;
};

struct NamedGraph {
    std::string name;
    PlanarEmbedding embedding;
    KnownFacts facts;
};

// k4, octahedron, cube, wheel5, wheel6, tritower, icosahedron.
// wheelK is a hub joined to a rim cycle of K vertices.
std::vector<std::string> named_graph_names();
NamedGraph named_graph(std::string_view name);

struct GeneratedInstance {
    PlanarEmbedding graph;
    PlanarEmbedding base;
    std::map<int, VertexId> inserted;  // face id of base -> inserted vertex
    CycleSeq initial_cycle;
};

// Triangulation on 2k+2 vertices: a k-antiprism with both k-gons capped by an
// apex. Vertex 0 is the top apex, 1..k the top rim, k+1..2k the bottom rim and
// 2k+1 the bottom apex.
RotationTable antiprism_triangulation(int k);
// Hamiltonian cycle of antiprism_triangulation(k).
std::vector<VertexId> antiprism_hamiltonian_cycle(int k);

// Rotation table with a new degree-3 vertex placed inside every face of a
// triangulation; vertex n0 + f sits in face f.
RotationTable insert_into_all_faces(const PlanarEmbedding& triangulation);

// Inserts a vertex into every face of `base`; the initial cycle is the given
// Hamiltonian cycle of `base`. Self-validates (GenerationInvalid on failure).
GeneratedInstance gen_inserted(const PlanarEmbedding& base, const std::vector<VertexId>& base_hamiltonian);

// n = 6k + 2. Throws PreconditionViolated for k < 3.
GeneratedInstance gen_inserted_antiprism(int k);

// Graph text format:
//   n m
//   v: w1 w2 ... wd      (one line per vertex, rotation order)
// '#' starts a comment. The serializer lists vertices ascending with each
// rotation starting at its least neighbour.
RotationTable parse_graph(std::string_view text);
std::string serialize_graph(const RotationTable& table);

// Cycle text format: whitespace-separated vertex ids.
CycleSeq parse_cycle(std::string_view text, const RotationTable& host);
std::string serialize_cycle(const CycleSeq& cycle);

}  // namespace longcycle
