#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "longcycle/oi3.hpp"
#include "longcycle/planar.hpp"

namespace longcycle {

// The chord-free graph H = G minus the chords of C, on V(C) plus the outer set B.
//
// Cycle edge i joins cycle[i] and cycle[i+1 mod c]. Side 0 of edge i is the
// face on the dart cycle[i] -> cycle[i+1], side 1 the face on its reverse.
// All faces on side 0 lie in one region bounded by C, all on side 1 in the other.
class BCGraph {
public:
    const PlanarEmbedding& host() const { return host_; }
    const CycleSeq& cycle() const { return cycle_; }
    const std::vector<VertexId>& outer() const { return outer_; }
    const std::vector<Edge>& chords() const { return chords_; }

    int cycle_length() const { return cycle_.length(); }
    int position(VertexId v) const { return position_[v]; }
    bool on_cycle(VertexId v) const { return position_[v] >= 0; }

    Edge cycle_edge(int index) const;
    // Index of a cycle edge, or -1 if u-v is not an edge of C.
    int cycle_edge_index(VertexId u, VertexId v) const;
    // Faces on side 0 and side 1 of cycle edge `index`.
    const std::array<int, 2>& edge_faces(int index) const { return edge_faces_[index]; }

private:
    friend BCGraph build_bc_graph(const PlanarEmbedding&, const CycleSeq&, std::span<const VertexId>);

    BCGraph(PlanarEmbedding host, CycleSeq cycle) : host_(std::move(host)), cycle_(std::move(cycle)) {}

    PlanarEmbedding host_;
    CycleSeq cycle_;
    std::vector<VertexId> outer_;
    std::vector<Edge> chords_;
    std::vector<int> position_;
    std::vector<std::array<int, 2>> edge_faces_;
};

BCGraph build_bc_graph(const PlanarEmbedding& emb, const CycleSeq& cycle, std::span<const VertexId> outer);

enum class FaceKind { Minor, Major };

struct FaceClass {
    int face = 0;
    int j = 0;               // number of C-edges
    int incident_outer = 0;  // outer vertices on the boundary
    FaceKind kind = FaceKind::Major;
    int side = 0;
    std::optional<VertexId> outer_vertex;  // set when incident_outer == 1
    // Cycle edge indices. For a face with one outer vertex they form the path
    // span_start, span_start+1, ..., span_start+j-1 (mod c); otherwise ascending.
    std::vector<int> c_edges;
    int span_start = -1;
    std::optional<int> middle;  // j == 3 with consecutive C-edges

    bool is_minor() const { return kind == FaceKind::Minor; }
    // Minor face with exactly one outer vertex and exactly `edges` C-edges.
    bool is_minor_with(int edges) const { return kind == FaceKind::Minor && incident_outer == 1 && j == edges; }
};

// Indexed by face id.
std::vector<FaceClass> classify_faces(const BCGraph& bc);

int opposite_face(const BCGraph& bc, int cycle_edge, int face);
int opposite_face(const BCGraph& bc, Edge c_edge, int face);

struct Transfer {
    int from = 0;
    int edge = 0;  // cycle edge index
    int to = 0;
    friend bool operator==(const Transfer&, const Transfer&) = default;
};

struct WeightState {
    std::vector<int> w0;
    std::vector<int> w1;
    std::vector<Transfer> transfers;
    // Every minor face has at least two C-edges. Guaranteed when C has no
    // extendable edge; the rules still run when it fails.
    bool minor_faces_have_two_c_edges = true;

    long sum_w0() const;
    long sum_w1() const;
};

// w0 = 6 on minor faces, 0 on major ones; then a minor 2-face sends 1 across
// each of its C-edges and a minor 3-face sends 1 across its middle C-edge.
WeightState run_discharging(const BCGraph& bc, std::span<const FaceClass> classes);
WeightState run_discharging(const BCGraph& bc);

struct FaceBound {
    int face = 0;
    int j = 0;
    int w1 = 0;
};

struct BoundsReport {
    int vertex_count = 0;  // |V(H)|
    int cycle_length = 0;  // c
    int mu = 0;            // number of minor faces
    bool ineq_i = false;   // mu >= |V(H)| - c + 2
    bool ineq_ii = false;  // 6 mu <= 4 c
    std::vector<FaceBound> iii_violations;  // faces with w1 > 2 j

    bool iii_holds() const { return iii_violations.empty(); }
};

BoundsReport check_counting_bounds(const BCGraph& bc, std::span<const FaceClass> classes,
                                   const WeightState& weights);

}  // namespace longcycle
