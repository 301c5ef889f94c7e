#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace longcycle {

using VertexId = std::int32_t;

// An ordered edge. Every undirected edge contributes two darts.
struct Dart {
    VertexId tail = 0;
    VertexId head = 0;

    Dart reversed() const { return {head, tail}; }
    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Undirected edge, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    static Edge of(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Cyclic neighbour orders of a simple graph on vertices 0..n-1.
//
// Each rotation is stored starting at its least neighbour, so two tables
// describing the same rotation system compare equal.
class RotationTable {
public:
    RotationTable() = default;

    // Validates ids, self-loops, repeated neighbours and symmetry.
    explicit RotationTable(std::vector<std::vector<VertexId>> rotations);

    int vertex_count() const { return static_cast<int>(rotations_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }

    std::span<const VertexId> rotation(VertexId v) const { return rotations_[v]; }
    const std::vector<std::vector<VertexId>>& rotations() const { return rotations_; }

    bool has_edge(VertexId u, VertexId v) const;
    // Position of u within the rotation at v, or -1.
    int index_of(VertexId v, VertexId u) const;
    // Neighbour following u in the rotation at v.
    VertexId successor(VertexId v, VertexId u) const;

    std::vector<Edge> edges() const;

    // Copy without the listed edges; rotations of the remaining edges are kept.
    RotationTable without_edges(std::span<const Edge> removed) const;

    friend bool operator==(const RotationTable&, const RotationTable&) = default;

private:
    std::vector<std::vector<VertexId>> rotations_;
    int edge_count_ = 0;
};

struct Face {
    int id = 0;
    std::vector<Dart> boundary;

    std::vector<VertexId> vertices() const;
};

// A connected rotation system verified to be a sphere embedding.
class PlanarEmbedding {
public:
    // Throws AsymmetricRotation / Disconnected / NotPlanarEmbedding.
    static PlanarEmbedding build(RotationTable table);

    const RotationTable& table() const { return table_; }
    int vertex_count() const { return table_.vertex_count(); }
    int edge_count() const { return table_.edge_count(); }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }

    // The face to the right-hand traversal of the dart.
    int face_of(Dart d) const;

private:
    PlanarEmbedding() = default;

    RotationTable table_;
    std::vector<Face> faces_;
    std::vector<int> dart_offset_;  // first dart slot of each vertex
    std::vector<int> dart_face_;
};

// Dart following d on its face: reverse d, then take the rotation successor at its head.
Dart next_dart(const RotationTable& table, Dart d);

struct Separator3 {
    std::array<VertexId, 3> vertices{};
    bool trivial = false;
    // Orders of the components of G - S, ascending.
    std::vector<int> component_sizes;
};

struct ConnectivityVerdict {
    int connectivity = 0;
    bool is_3_connected = false;
    bool is_essentially_4_connected = false;
    // Separator of size < 3 when not 3-connected, else a nontrivial 3-separator.
    std::optional<std::vector<VertexId>> witness;
};

// Orders of the connected components after deleting `removed` (ascending).
std::vector<int> component_sizes_without(const RotationTable& table,
                                         std::span<const VertexId> removed);

bool is_connected(const RotationTable& table);

int vertex_connectivity(const PlanarEmbedding& emb);
int vertex_connectivity(const RotationTable& table);

// All vertex triples whose removal disconnects the graph, in lexicographic order.
std::vector<Separator3> enumerate_3_separators(const PlanarEmbedding& emb);

ConnectivityVerdict check_essentially_4_connected(const PlanarEmbedding& emb);

}  // namespace longcycle
