#include "longcycle/oi3.hpp"

#include <algorithm>
#include <string>

#include "longcycle/error.hpp"

namespace longcycle {

std::vector<VertexId> normalize_cycle(std::vector<VertexId> vertices) {
    if (vertices.empty()) return vertices;
    std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.size() > 2 && vertices.back() < vertices[1]) std::reverse(vertices.begin() + 1, vertices.end());
    return vertices;
}

CycleSeq CycleSeq::from(const RotationTable& host, std::vector<VertexId> vertices) {
    const int n = host.vertex_count();
    if (vertices.size() < 3)
        fail(ErrorCode::NotACycle, "a cycle needs at least 3 vertices, got " + std::to_string(vertices.size()));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (VertexId v : vertices) {
        if (v < 0 || v >= n) fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " is not in the graph");
        if (seen[v]) fail(ErrorCode::NotACycle, "vertex " + std::to_string(v) + " repeats");
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        VertexId a = vertices[i];
        VertexId b = vertices[(i + 1) % vertices.size()];
        if (!host.has_edge(a, b))
            fail(ErrorCode::NotACycle, std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
    }
    return CycleSeq(normalize_cycle(std::move(vertices)));
}

std::vector<int> CycleSeq::positions(int n) const {
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < length(); ++i) pos[vertices_[i]] = i;
    return pos;
}

OI3Report validate_oi3(const PlanarEmbedding& emb, const CycleSeq& cycle) {
    const RotationTable& g = emb.table();
    const int n = g.vertex_count();
    const auto pos = cycle.positions(n);
    OI3Report report;
    for (VertexId v = 0; v < n; ++v) {
        if (pos[v] >= 0) continue;
        report.outer.push_back(v);
        if (g.degree(v) != 3) report.violations.push_back({v, OI3Reason::DegreeNotThree});
        const auto rot = g.rotation(v);
        if (std::any_of(rot.begin(), rot.end(), [&](VertexId u) { return pos[u] < 0; }))
            report.violations.push_back({v, OI3Reason::AdjacentOutside});
    }
    report.valid = report.violations.empty();
    return report;
}

std::vector<ExtendableEdge> find_extendable_edges(const PlanarEmbedding& emb, const CycleSeq& cycle,
                                                  std::span<const VertexId> outer) {
    const RotationTable& g = emb.table();
    const int c = cycle.length();
    std::vector<char> is_outer(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId b : outer) is_outer[b] = 1;

    std::vector<ExtendableEdge> out;
    for (int i = 0; i < c; ++i) {
        const VertexId x = cycle[i];
        const VertexId y = cycle[(i + 1) % c];
        std::optional<VertexId> witness;
        for (VertexId w : g.rotation(x))
            if (is_outer[w] && g.has_edge(w, y) && (!witness || w < *witness)) witness = w;
        if (witness) out.push_back({x, y, *witness});
    }
    return out;
}

CycleSeq extend_cycle(const RotationTable& host, const CycleSeq& cycle, const ExtendableEdge& edge) {
    const auto& vs = cycle.vertices();
    const int c = cycle.length();
    if (std::find(vs.begin(), vs.end(), edge.witness) != vs.end())
        fail(ErrorCode::PreconditionViolated, "witness " + std::to_string(edge.witness) + " already on the cycle");
    if (!host.has_edge(edge.x, edge.witness) || !host.has_edge(edge.y, edge.witness))
        fail(ErrorCode::PreconditionViolated, "witness is not adjacent to both ends of the edge");
    for (int i = 0; i < c; ++i) {
        const VertexId a = vs[i];
        const VertexId b = vs[(i + 1) % c];
        if ((a == edge.x && b == edge.y) || (a == edge.y && b == edge.x)) {
            std::vector<VertexId> next(vs.begin(), vs.begin() + i + 1);
            next.push_back(edge.witness);
            next.insert(next.end(), vs.begin() + i + 1, vs.end());
            return CycleSeq::from(host, std::move(next));
        }
    }
    fail(ErrorCode::PreconditionViolated,
         std::to_string(edge.x) + "-" + std::to_string(edge.y) + " is not an edge of the cycle");
}

}  // namespace longcycle
