#pragma once

#include <optional>
#include <span>
#include <vector>

#include "longcycle/planar.hpp"

namespace longcycle {

// A simple cycle of a host graph, kept in normal form: it starts at its
// least vertex and continues toward the smaller of that vertex's two cycle
// neighbours. Two CycleSeq values describe the same cycle iff they compare equal.
class CycleSeq {
public:
    CycleSeq() = default;

    // Validates against the host graph (NotACycle / UnknownVertex) and normalizes.
    static CycleSeq from(const RotationTable& host, std::vector<VertexId> vertices);

    int length() const { return static_cast<int>(vertices_.size()); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    VertexId operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }

    // positions[v] = index of v on the cycle, or -1; sized to n.
    std::vector<int> positions(int n) const;

    friend bool operator==(const CycleSeq&, const CycleSeq&) = default;

private:
    explicit CycleSeq(std::vector<VertexId> normalized) : vertices_(std::move(normalized)) {}

    std::vector<VertexId> vertices_;
};

std::vector<VertexId> normalize_cycle(std::vector<VertexId> vertices);

enum class OI3Reason { DegreeNotThree, AdjacentOutside };

struct OI3Violation {
    VertexId vertex = 0;
    OI3Reason reason = OI3Reason::DegreeNotThree;
    friend bool operator==(const OI3Violation&, const OI3Violation&) = default;
};

struct OI3Report {
    bool valid = false;
    std::vector<VertexId> outer;  // V(G) \ V(C), ascending
    std::vector<OI3Violation> violations;
};

OI3Report validate_oi3(const PlanarEmbedding& emb, const CycleSeq& cycle);

struct ExtendableEdge {
    VertexId x = 0;  // x precedes y on the normalized cycle
    VertexId y = 0;
    VertexId witness = 0;
    friend bool operator==(const ExtendableEdge&, const ExtendableEdge&) = default;
};

// Cycle edges whose ends share a neighbour in `outer`, in cycle order, each with
// its least witness.
std::vector<ExtendableEdge> find_extendable_edges(const PlanarEmbedding& emb, const CycleSeq& cycle,
                                                  std::span<const VertexId> outer);

// Replaces the cycle edge xy by the path x-w-y.
CycleSeq extend_cycle(const RotationTable& host, const CycleSeq& cycle, const ExtendableEdge& edge);

}  // namespace longcycle
