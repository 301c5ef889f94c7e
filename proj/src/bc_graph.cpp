#include "longcycle/bc_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "longcycle/error.hpp"

namespace longcycle {

Edge BCGraph::cycle_edge(int index) const {
    const int c = cycle_length();
    return Edge::of(cycle_[index], cycle_[(index + 1) % c]);
}

int BCGraph::cycle_edge_index(VertexId u, VertexId v) const {
    const int c = cycle_length();
    const int pu = position_[u];
    const int pv = position_[v];
    if (pu < 0 || pv < 0) return -1;
    if ((pu + 1) % c == pv) return pu;
    if ((pv + 1) % c == pu) return pv;
    return -1;
}

BCGraph build_bc_graph(const PlanarEmbedding& emb, const CycleSeq& cycle, std::span<const VertexId> outer) {
    const RotationTable& g = emb.table();
    const int n = g.vertex_count();
    const int c = cycle.length();
    const auto pos = cycle.positions(n);

    std::vector<VertexId> expected;
    for (VertexId v = 0; v < n; ++v)
        if (pos[v] < 0) expected.push_back(v);
    std::vector<VertexId> given(outer.begin(), outer.end());
    std::sort(given.begin(), given.end());
    if (given != expected) fail(ErrorCode::PreconditionViolated, "outer set is not the complement of the cycle");
    for (VertexId b : expected) {
        if (g.degree(b) != 3)
            fail(ErrorCode::PreconditionViolated, "outer vertex " + std::to_string(b) + " does not have degree 3");
        for (VertexId u : g.rotation(b))
            if (pos[u] < 0)
                fail(ErrorCode::PreconditionViolated, "outer vertices " + std::to_string(b) + " and " +
                                                          std::to_string(u) + " are adjacent");
    }

    std::vector<Edge> chords;
    for (const Edge& e : g.edges()) {
        if (pos[e.u] < 0 || pos[e.v] < 0) continue;
        const int d = (pos[e.u] - pos[e.v] + c) % c;
        if (d != 1 && d != c - 1) chords.push_back(e);
    }

    BCGraph bc(PlanarEmbedding::build(g.without_edges(chords)), cycle);
    bc.outer_ = std::move(expected);
    bc.chords_ = std::move(chords);
    bc.position_ = pos;
    bc.edge_faces_.resize(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) {
        const Dart d{cycle[i], cycle[(i + 1) % c]};
        bc.edge_faces_[i] = {bc.host_.face_of(d), bc.host_.face_of(d.reversed())};
    }
    return bc;
}

std::vector<FaceClass> classify_faces(const BCGraph& bc) {
    const int c = bc.cycle_length();
    std::vector<FaceClass> out;
    out.reserve(bc.host().faces().size());

    for (const Face& face : bc.host().faces()) {
        FaceClass fc;
        fc.face = face.id;
        fc.side = -1;
        for (const Dart& d : face.boundary) {
            if (!bc.on_cycle(d.tail)) {
                ++fc.incident_outer;
                fc.outer_vertex = d.tail;
                continue;
            }
            const int e = bc.cycle_edge_index(d.tail, d.head);
            if (e < 0) continue;
            fc.c_edges.push_back(e);
            fc.side = (bc.cycle()[e] == d.tail) ? 0 : 1;
        }
        if (fc.incident_outer != 1) fc.outer_vertex.reset();
        fc.j = static_cast<int>(fc.c_edges.size());
        fc.kind = fc.incident_outer <= 1 ? FaceKind::Minor : FaceKind::Major;
        std::sort(fc.c_edges.begin(), fc.c_edges.end());

        if (fc.incident_outer == 0 && fc.j != c)
            fail(ErrorCode::InternalError, "face without outer vertices is not bounded by C");

        if (fc.incident_outer == 1) {
            // The C-edges must form one path of C.
            std::vector<char> in(static_cast<std::size_t>(c), 0);
            for (int e : fc.c_edges) in[e] = 1;
            int start = -1;
            for (int e : fc.c_edges)
                if (!in[(e - 1 + c) % c]) start = e;
            bool contiguous = start >= 0;
            for (int k = 0; contiguous && k < fc.j; ++k) contiguous = in[(start + k) % c];
            if (!contiguous || fc.j == 0)
                fail(ErrorCode::InternalError,
                     "C-edges of face " + std::to_string(face.id) + " with one outer vertex are not contiguous");
            fc.span_start = start;
            for (int k = 0; k < fc.j; ++k) fc.c_edges[k] = (start + k) % c;
            if (fc.j == 3) fc.middle = (start + 1) % c;
        }
        out.push_back(std::move(fc));
    }
    return out;
}

int opposite_face(const BCGraph& bc, int cycle_edge, int face) {
    if (cycle_edge < 0 || cycle_edge >= bc.cycle_length())
        fail(ErrorCode::NotACEdgeOfFace, "cycle edge index out of range");
    const auto& sides = bc.edge_faces(cycle_edge);
    if (sides[0] == face) return sides[1];
    if (sides[1] == face) return sides[0];
    fail(ErrorCode::NotACEdgeOfFace,
         "cycle edge " + std::to_string(cycle_edge) + " is not a C-edge of face " + std::to_string(face));
}

int opposite_face(const BCGraph& bc, Edge c_edge, int face) {
    const int index = bc.cycle_edge_index(c_edge.u, c_edge.v);
    if (index < 0)
        fail(ErrorCode::NotACEdgeOfFace,
             std::to_string(c_edge.u) + "-" + std::to_string(c_edge.v) + " is not an edge of C");
    return opposite_face(bc, index, face);
}

long WeightState::sum_w0() const { return std::accumulate(w0.begin(), w0.end(), 0L); }
long WeightState::sum_w1() const { return std::accumulate(w1.begin(), w1.end(), 0L); }

WeightState run_discharging(const BCGraph& bc, std::span<const FaceClass> classes) {
    WeightState ws;
    ws.w0.resize(classes.size());
    for (const FaceClass& fc : classes) {
        ws.w0[fc.face] = fc.is_minor() ? 6 : 0;
        if (fc.is_minor() && fc.j < 2) ws.minor_faces_have_two_c_edges = false;
    }
    ws.w1 = ws.w0;

    auto send = [&](int from, int edge) {
        const int to = opposite_face(bc, edge, from);
        ws.transfers.push_back({from, edge, to});
        ws.w1[from] -= 1;
        ws.w1[to] += 1;
    };
    for (const FaceClass& fc : classes) {
        if (fc.is_minor_with(2)) {  // R1
            send(fc.face, fc.c_edges[0]);
            send(fc.face, fc.c_edges[1]);
        } else if (fc.is_minor_with(3) && fc.middle) {  // R2
            send(fc.face, *fc.middle);
        }
    }
    return ws;
}

WeightState run_discharging(const BCGraph& bc) {
    const auto classes = classify_faces(bc);
    return run_discharging(bc, classes);
}

BoundsReport check_counting_bounds(const BCGraph& bc, std::span<const FaceClass> classes,
                                   const WeightState& weights) {
    BoundsReport r;
    r.vertex_count = bc.host().vertex_count();
    r.cycle_length = bc.cycle_length();
    r.mu = static_cast<int>(std::count_if(classes.begin(), classes.end(), [](const FaceClass& f) { return f.is_minor(); }));
    r.ineq_i = r.mu >= r.vertex_count - r.cycle_length + 2;
    r.ineq_ii = 6 * r.mu <= 4 * r.cycle_length;
    for (const FaceClass& fc : classes)
        if (weights.w1[fc.face] > 2 * fc.j) r.iii_violations.push_back({fc.face, fc.j, weights.w1[fc.face]});
    return r;
}

}  // namespace longcycle
