#include "longcycle/replacements.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "longcycle/error.hpp"

namespace longcycle {

namespace {

constexpr std::array<PatternInfo, 13> kCatalogue{{
    {PatternId::C2b, "C2b", 2,
     "minor 2-face (a; x,y,z) opposite across yz to a minor 2-face (b; y,z,u)", "xyzu", "xazybu", ""},
    {PatternId::C2c, "C2c", 1,
     "minor 2-face (a; x,y,z) whose C-edges lie on a minor 3-face (b; x,y,z,u) with middle yz; chord yu",
     "xyzu", "xazyu", "yu"},
    {PatternId::C3a, "C3a", 3,
     "minor 3-face (a; v,x,y,z) opposite to minor 2-faces (b; w,v,x) and (c; y,z,u)", "wvxyzu", "wbxvazycu", ""},
    {PatternId::C3b, "C3b", 2,
     "minor 3-face (a; v,x,y,z) opposite to a minor 2-face (b; w,v,x) and a minor 3-face (c; x,y,z,u)",
     "wvxyzu", "wvazyxcu", ""},
    {PatternId::C4a_vx, "C4a_vx", 1,
     "minor 4-face (a; v,w,x,y,z) opposite to minor 2-faces (b; u,v,w) and (c; w,x,y); chord vx", "vwxyz",
     "vxwcyz", "vx"},
    {PatternId::C4a_xz, "C4a_xz", 1,
     "minor 4-face (a; v,w,x,y,z) opposite to minor 2-faces (b; u,v,w) and (c; w,x,y); chord xz", "vwxyz",
     "vwcyxz", "xz"},
    {PatternId::C4b_vy, "C4b_vy", 2,
     "minor 4-face (a; v,w,x,y,z) opposite to minor 2-faces (b; t,v,w) and (c; x,y,z); chord vy", "tvwxyz",
     "tbwvyxcz", "vy"},
    {PatternId::C4b_wy, "C4b_wy", 1,
     "minor 4-face (a; v,w,x,y,z) opposite to minor 2-faces (b; t,v,w) and (c; x,y,z); chord wy", "tvwxyz",
     "tvwyxcz", "wy"},
    {PatternId::C4c_vy, "C4c_vy", 1,
     "minor 4-face (a; v,w,x,y,z) opposite to a minor 3-face (b; t,v,w,x) with middle vw and a minor 2-face "
     "(c; x,y,z); chord vy",
     "tvwxyz", "tbxwvyz", "vy"},
    {PatternId::C4c_wy, "C4c_wy", 1,
     "minor 4-face (a; v,w,x,y,z) opposite to a minor 3-face (b; t,v,w,x) with middle vw and a minor 2-face "
     "(c; x,y,z); chord wy",
     "tvwxyz", "tvwyxcz", "wy"},
    {PatternId::C4d, "C4d", 1,
     "minor 4-face (a; v,w,x,y,z) opposite to minor 2-faces (b; v,w,x) and (c; x,y,z); chord wy", "vwxyz",
     "vwyxcz", "wy"},
    {PatternId::C5_vx, "C5_vx", 1,
     "minor 5-face (a; s,v,w,x,y,z) whose C-edges all lie on minor 2-faces (b; s,v,w), (c; w,x,y), (d; y,z,.); "
     "chord vx",
     "svwx", "sbwvx", "vx"},
    {PatternId::C5_xz, "C5_xz", 1,
     "minor 5-face (a; s,v,w,x,y,z) whose C-edges all lie on minor 2-faces (b; s,v,w), (c; w,x,y), (d; y,z,.); "
     "chord xz",
     "wxyz", "wcyxz", "xz"},
}};

// A minor face opposite the main face across the main face's C-edge
// (edge_offset, edge_offset+1); it must have exactly `edges` C-edges forming the
// path from offset `from` to `from + edges`, and its outer vertex is bound to `role`.
struct FaceRequirement {
    char role;
    int edge_offset;
    int from;
    int edges;
};

// Offsets are measured along the main face's C-path in the scan orientation,
// with offset 0 at the path's first vertex.
struct Shape {
    PatternId id;
    int main_edges;
    std::string_view cycle_roles;  // roles of consecutive cycle vertices ...
    int first_offset;              // ... starting at this offset
    std::array<FaceRequirement, 3> faces;
    int face_count;
};

constexpr std::array<Shape, 13> kShapes{{
    {PatternId::C2b, 2, "xyzu", 0, {{{'b', 1, 1, 2}}}, 1},
    {PatternId::C2c, 2, "xyzu", 0, {{{'b', 1, 0, 3}}}, 1},
    {PatternId::C3a, 3, "wvxyzu", -1, {{{'b', 0, -1, 2}, {'c', 2, 2, 2}}}, 2},
    {PatternId::C3b, 3, "wvxyzu", -1, {{{'b', 0, -1, 2}, {'c', 2, 1, 3}}}, 2},
    {PatternId::C4a_vx, 4, "uvwxyz", -1, {{{'b', 0, -1, 2}, {'c', 1, 1, 2}}}, 2},
    {PatternId::C4a_xz, 4, "uvwxyz", -1, {{{'b', 0, -1, 2}, {'c', 1, 1, 2}}}, 2},
    {PatternId::C4b_vy, 4, "tvwxyz", -1, {{{'b', 0, -1, 2}, {'c', 2, 2, 2}}}, 2},
    {PatternId::C4b_wy, 4, "tvwxyz", -1, {{{'b', 0, -1, 2}, {'c', 2, 2, 2}}}, 2},
    {PatternId::C4c_vy, 4, "tvwxyz", -1, {{{'b', 0, -1, 3}, {'c', 2, 2, 2}}}, 2},
    {PatternId::C4c_wy, 4, "tvwxyz", -1, {{{'b', 0, -1, 3}, {'c', 2, 2, 2}}}, 2},
    {PatternId::C4d, 4, "vwxyz", 0, {{{'b', 0, 0, 2}, {'c', 2, 2, 2}}}, 2},
    {PatternId::C5_vx, 5, "svwxyz", 0, {{{'b', 0, 0, 2}, {'c', 2, 2, 2}, {'d', 4, 4, 2}}}, 3},
    {PatternId::C5_xz, 5, "svwxyz", 0, {{{'b', 0, 0, 2}, {'c', 2, 2, 2}, {'d', 4, 4, 2}}}, 3},
}};

constexpr int kMinCycleLength = 8;

int mod(int a, int c) { return ((a % c) + c) % c; }

// The main face's C-path read in one orientation.
struct PathFrame {
    int start;  // cycle position at offset 0
    int orientation;
    int c;

    int position(int offset) const { return mod(start + orientation * offset, c); }
    // Cycle edge index between offsets k and k+1.
    int edge(int k) const { return orientation > 0 ? position(k) : position(k + 1); }
    // Does a face with this span run from offset `from` over `edges` edges?
    bool spans(const FaceClass& f, int from, int edges) const {
        const int expected_start = orientation > 0 ? position(from) : position(from + edges);
        return f.span_start == expected_start;
    }
};

std::optional<ReplacementInstance> match(const Shape& shape, const FaceClass& main, int orientation,
                                         const PlanarEmbedding& emb, const BCGraph& bc,
                                         std::span<const FaceClass> classes) {
    const RotationTable& g = emb.table();
    const int c = bc.cycle_length();
    const int j = main.j;
    const PathFrame frame{orientation > 0 ? main.span_start : mod(main.span_start + j, c), orientation, c};

    ReplacementInstance inst;
    inst.pattern = shape.id;
    inst.main_face = main.face;
    inst.orientation = orientation;
    inst.binding['a'] = *main.outer_vertex;
    for (std::size_t k = 0; k < shape.cycle_roles.size(); ++k)
        inst.binding[shape.cycle_roles[k]] = bc.cycle()[frame.position(shape.first_offset + static_cast<int>(k))];

    for (int i = 0; i < shape.face_count; ++i) {
        const FaceRequirement& req = shape.faces[static_cast<std::size_t>(i)];
        const FaceClass& other = classes[opposite_face(bc, frame.edge(req.edge_offset), main.face)];
        if (!other.is_minor_with(req.edges) || !frame.spans(other, req.from, req.edges)) return std::nullopt;
        inst.binding[req.role] = *other.outer_vertex;
    }

    // Outer vertices sit on faces on either side of C; a degree-3 vertex can
    // bound several of them, so distinctness is checked, not assumed.
    std::vector<VertexId> outer_bound;
    for (const auto& [role, v] : inst.binding)
        if (role == 'a' || role == 'b' || role == 'c' || role == 'd') outer_bound.push_back(v);
    std::sort(outer_bound.begin(), outer_bound.end());
    if (std::adjacent_find(outer_bound.begin(), outer_bound.end()) != outer_bound.end()) return std::nullopt;

    const PatternInfo& info = pattern_info(shape.id);
    for (std::size_t k = 0; k + 1 < info.chords.size(); k += 2) {
        const VertexId p = inst.binding.at(info.chords[k]);
        const VertexId q = inst.binding.at(info.chords[k + 1]);
        if (!g.has_edge(p, q)) return std::nullopt;
        inst.required_chords.push_back(Edge::of(p, q));
    }
    for (char r : info.replaced) inst.replaced_path.push_back(inst.binding.at(r));
    for (char r : info.replacement) inst.replacement_path.push_back(inst.binding.at(r));
    for (std::size_t k = 0; k + 1 < inst.replacement_path.size(); ++k)
        if (!g.has_edge(inst.replacement_path[k], inst.replacement_path[k + 1]))
            fail(ErrorCode::InternalError, std::string("pattern ") + std::string(info.name) +
                                               " matched but its replacement path uses a non-edge");
    return inst;
}

template <typename Visit>
void scan(const PlanarEmbedding& emb, const BCGraph& bc, std::span<const FaceClass> classes, Visit&& visit) {
    // Without outer vertices nothing can be absorbed, whatever the length.
    if (bc.outer().empty()) return;
    if (bc.cycle_length() < kMinCycleLength)
        fail(ErrorCode::CycleTooShort, "replacement detection needs a cycle of length at least 8, got " +
                                           std::to_string(bc.cycle_length()));
    for (const FaceClass& f : classes) {
        if (f.incident_outer != 1 || f.j < 2 || f.j > 5) continue;
        for (const Shape& shape : kShapes) {
            if (shape.main_edges != f.j) continue;
            for (int orientation : {1, -1})
                if (auto inst = match(shape, f, orientation, emb, bc, classes))
                    if (!visit(std::move(*inst))) return;
        }
    }
}

}  // namespace

std::span<const PatternInfo> catalogue() { return kCatalogue; }

const PatternInfo& pattern_info(PatternId id) { return kCatalogue[static_cast<std::size_t>(id)]; }

std::string_view to_string(PatternId id) { return pattern_info(id).name; }

std::optional<PatternId> pattern_from_string(std::string_view name) {
    for (const PatternInfo& p : kCatalogue)
        if (p.name == name) return p.id;
    return std::nullopt;
}

std::optional<ReplacementInstance> detect_replacement(const PlanarEmbedding& emb, const BCGraph& bc,
                                                      std::span<const FaceClass> classes) {
    std::optional<ReplacementInstance> found;
    scan(emb, bc, classes, [&](ReplacementInstance inst) {
        found = std::move(inst);
        return false;
    });
    return found;
}

std::vector<ReplacementInstance> detect_all_replacements(const PlanarEmbedding& emb, const BCGraph& bc,
                                                         std::span<const FaceClass> classes) {
    std::vector<ReplacementInstance> out;
    scan(emb, bc, classes, [&](ReplacementInstance inst) {
        out.push_back(std::move(inst));
        return true;
    });
    return out;
}

CycleSeq apply_replacement(const PlanarEmbedding& emb, const CycleSeq& cycle, const ReplacementInstance& inst) {
    const auto& vs = cycle.vertices();
    const int c = cycle.length();
    const auto& old_path = inst.replaced_path;
    const auto& new_path = inst.replacement_path;
    if (old_path.size() < 2 || new_path.front() != old_path.front() || new_path.back() != old_path.back())
        fail(ErrorCode::StaleInstance, "replacement path does not share the replaced path's ends");

    const auto pos = cycle.positions(emb.vertex_count());
    const int start = pos[old_path.front()];
    int direction = 0;
    for (int d : {1, -1}) {
        bool fits = start >= 0;
        for (std::size_t k = 0; fits && k < old_path.size(); ++k)
            fits = vs[mod(start + d * static_cast<int>(k), c)] == old_path[k];
        if (fits) {
            direction = d;
            break;
        }
    }
    if (direction == 0) fail(ErrorCode::StaleInstance, "replaced path is not a subpath of the cycle");
    for (std::size_t k = 1; k + 1 < new_path.size(); ++k) {
        const VertexId v = new_path[k];
        const bool kept = std::find(old_path.begin(), old_path.end(), v) != old_path.end();
        if (!kept && pos[v] >= 0) fail(ErrorCode::StaleInstance, "vertex " + std::to_string(v) + " already on the cycle");
    }

    std::vector<VertexId> next(new_path.begin(), new_path.end());
    const int old_len = static_cast<int>(old_path.size());
    // Rest of C after the replaced path; the cycle closes at old_path.front().
    for (int k = old_len; k < c; ++k) next.push_back(vs[mod(start + direction * k, c)]);

    CycleSeq result;
    try {
        result = CycleSeq::from(emb.table(), std::move(next));
    } catch (const Error& e) {
        fail(ErrorCode::StaleInstance, std::string("replacement does not yield a cycle: ") + e.what());
    }
    if (result.length() != c + inst.increment())
        fail(ErrorCode::InternalError, "replacement changed the length by an unexpected amount");
    if (!validate_oi3(emb, result).valid)
        fail(ErrorCode::InternalError, "replacement produced a cycle that is not outer-independent-3");
    return result;
}

}  // namespace longcycle
